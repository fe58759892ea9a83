"""Moving left ideals along a surjective algebra morphism A -> A' (extended to A[x] -> A'[x])."""

from ..errors import InputError, NotSurjective
from ..fieldcore.linalg import kernel_basis_raw, matvec, rank, solve_many
from ..polymod import ModVector
from .algpoly import AlgPoly
from .ideal import LeftIdeal


class AlgebraMorphism:
    """pi: A -> A' given by its matrix on coordinates (columns = images of basis elements)."""

    def __init__(self, source, target, matrix, check=True):
        self.source = source
        self.target = target
        F = source.field
        self.matrix = [[F.convert(c) for c in row] for row in matrix]
        if len(self.matrix) != target.dim or any(len(r) != source.dim for r in self.matrix):
            raise InputError("morphism matrix has the wrong shape", "leftideal", "transport")
        if check:
            self._check()

    def __call__(self, a):
        return matvec(self.source.field, self.matrix, list(a))

    def _check(self):
        A, B = self.source, self.target
        if self(A.one()) != B.one():
            raise InputError("morphism does not preserve the unit", "leftideal", "transport")
        for i in range(A.dim):
            for j in range(A.dim):
                if self(A.mul(A.basis(i), A.basis(j))) != B.mul(self(A.basis(i)), self(A.basis(j))):
                    raise InputError("morphism is not multiplicative", "leftideal", "transport")

    def is_surjective(self):
        return rank(self.source.field, self.matrix) == self.target.dim

    def kernel(self):
        return kernel_basis_raw(self.source.field, self.matrix, self.source.dim)

    def section(self, b):
        """Some preimage of b."""
        return solve_many(self.source.field, self.matrix, [list(b)])[0]

    def apply_poly(self, a):
        return AlgPoly(self.target, a.nvars, {e: self(c) for e, c in a.terms.items()})

    def _map_terms(self, terms, fn, dim):
        F = self.source.field
        by_exp = {}
        for (pos, e), c in terms.items():
            by_exp.setdefault(e, [F.zero] * dim)[pos] = c
        out = {}
        for e, vec in by_exp.items():
            for k, y in enumerate(fn(vec)):
                if not F.is_zero(y):
                    out[(k, e)] = y
        return out


def quotient_morphism(A, rad_quotient):
    """A -> A/rad A for a RadicalQuotient."""
    B = rad_quotient.quotient
    cols = [rad_quotient.project(A.basis(i)) for i in range(A.dim)]
    return AlgebraMorphism(A, B, [list(r) for r in zip(*cols)])


def transport(pi, I, direction="image"):
    """Image pi(I) (a left ideal of A'[x] since pi is onto) or preimage pi^-1(I)."""
    if not pi.is_surjective():
        raise NotSurjective("transport needs a surjective morphism", "leftideal", "transport")
    A, B = pi.source, pi.target
    n = I.nvars
    F = A.field
    if direction == "image":
        if I.algebra is not A:
            raise InputError("ideal does not live over the source algebra", "leftideal", "transport")
        vecs = [ModVector(F, n, B.dim, pi._map_terms(v.terms, pi, A.dim))
                for v in I.module.basis]
        return LeftIdeal.from_vectors(B, n, vecs)
    if direction == "preimage":
        if I.algebra is not B:
            raise InputError("ideal does not live over the target algebra", "leftideal", "transport")
        vecs = [ModVector(F, n, A.dim, pi._map_terms(v.terms, pi.section, B.dim))
                for v in I.module.basis]
        for k in pi.kernel():
            vecs.append(AlgPoly.const(A, n, k).to_vector())
        return LeftIdeal.from_vectors(A, n, vecs)
    raise InputError(f"direction must be 'image' or 'preimage', not {direction!r}", "leftideal",
                     "transport")

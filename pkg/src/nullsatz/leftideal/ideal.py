"""Left ideals of A[x_1..x_n] stored as F[x]-submodules of F[x]^d."""

from ..errors import MixedParents
from ..polymod import DEGREE_CAP, Submodule
from .algpoly import AlgPoly, left_mul_terms


class LeftIdeal:
    """Left ideal of A[x]; the backing submodule is the F[x]-span of all b_i g.

    Because the variables are central, A[x] g equals that span, so membership
    and equality reduce to module Gröbner bases over F[x].
    """

    def __init__(self, algebra, nvars, module, gens=None):
        self.algebra = algebra
        self.nvars = nvars
        self.module = module
        self.gens = list(gens) if gens is not None else None

    @classmethod
    def generate(cls, A, n, gens, degree_cap=DEGREE_CAP):
        vecs = []
        for g in gens:
            if g.algebra is not A or g.nvars != n:
                raise MixedParents("generator over a different ring", "leftideal", "generate")
            vecs.append(g.to_vector())
        return cls.from_vectors(A, n, vecs, degree_cap=degree_cap, gens=gens)

    @classmethod
    def from_vectors(cls, A, n, vecs, degree_cap=DEGREE_CAP, gens=None):
        """Left ideal generated by the given F[x]^d vectors (closing under left multiplication)."""
        spanning = []
        for v in vecs:
            for i in range(A.dim):
                t = left_mul_terms(A, A.basis(i), v.terms)
                if t:
                    spanning.append(t)
        S = Submodule.from_terms(A.field, n, A.dim, spanning, degree_cap=degree_cap)
        return cls(A, n, S, gens)

    @classmethod
    def full(cls, A, n):
        return cls.generate(A, n, [AlgPoly.const(A, n, A.one())])

    @classmethod
    def zero(cls, A, n):
        return cls(A, n, Submodule(A.field, n, A.dim, []), [])

    def contains(self, a):
        if isinstance(a, AlgPoly):
            a = a.to_vector()
        return self.module.contains(a)

    def __contains__(self, a):
        return self.contains(a)

    def __le__(self, other):
        return all(other.module.contains(v) for v in self.module.basis)

    def __eq__(self, other):
        return (isinstance(other, LeftIdeal) and self.algebra is other.algebra
                and self.nvars == other.nvars and self.module == other.module)

    def __hash__(self):
        return hash(self.module)

    def is_full(self):
        return self.module.is_full()

    def is_zero(self):
        return self.module.is_zero()

    def basis(self):
        """Reduced Gröbner basis, as algebra-valued polynomials."""
        return [AlgPoly.from_vector(self.algebra, v) for v in self.module.basis]

    def generators(self):
        return self.gens if self.gens is not None else self.basis()

    def check_closure(self):
        """Is the backing submodule stable under left multiplication by every basis element?"""
        A = self.algebra
        for v in self.module.basis:
            for i in range(A.dim):
                if not self.module.contains(left_mul_terms(A, A.basis(i), v.terms)):
                    return False
        return True

    def sum(self, other):
        return LeftIdeal(self.algebra, self.nvars,
                         Submodule(self.algebra.field, self.nvars, self.algebra.dim,
                                   self.module.gens + other.module.gens))

    def gb_strings(self):
        return [g.to_string() for g in self.basis()]

    def __repr__(self):
        return f"LeftIdeal([{', '.join(self.gb_strings())}])"


def generate(A, n, gens):
    return LeftIdeal.generate(A, n, gens)


def contains(I, a):
    return I.contains(a)

"""Ideals of the center F[x] versus two-sided ideals of M_k(F)[x]."""

from ..errors import NotSplit
from ..findim import radical, wedderburn
from ..polymod import ModVector, Submodule, colon_vector
from ..leftideal import AlgPoly, FiniteQuotient, LeftIdeal


def _check_split(A):
    """A must be a split central simple algebra M_k(F)."""
    W = wedderburn(A)
    if W.radical or len(W.factors) != 1 or W.factors[0].m != 1:
        raise NotSplit("the correspondence needs A = M_k(F) over its base field", "nullsatz",
                       "azumaya_correspondence")
    return W


def extend_ideal(A, J):
    """J (an ideal of F[x], rank-1 submodule) to the two-sided ideal J A[x] = M_k(J)."""
    _check_split(A)
    n = J.nvars
    gens = [AlgPoly(A, n, {e: A.scalar(c) for (_, e), c in g.terms.items()}) for g in J.gens]
    return LeftIdeal.generate(A, n, gens)


def contract_ideal(I):
    """I ∩ F[x] (the center), as an ideal of F[x]."""
    A = I.algebra
    one = AlgPoly.const(A, I.nvars, A.one()).to_vector()
    return colon_vector(I.module, one)


def azumaya_correspondence(A, J):
    """(J A[x], (J A[x]) ∩ R) for an ideal J of the center R = F[x]."""
    ext = extend_ideal(A, J)
    return ext, contract_ideal(ext)


def round_trip(A, J):
    """Does J -> J A[x] -> (J A[x]) ∩ R give back J?"""
    _, back = azumaya_correspondence(A, J)
    return back == Submodule(J.field, J.nvars, 1, J.gens)


def is_maximal_center_ideal(J):
    """Is F[x]/J a field (J of finite codimension)?"""
    from ..findim import FinDimAlgebra, is_field
    from ..polymod import QuotientSpace, is_zero_dimensional

    ok, _ = is_zero_dimensional(J)
    if not ok or J.is_full():
        return False
    Q = QuotientSpace(J)
    F = J.field
    d = Q.dim
    structure = []
    for a in Q.terms:
        plane = []
        for b in Q.terms:
            plane.append(Q.coords_of_terms({(0, tuple(x + y for x, y in zip(a[1], b[1]))): F.one}))
        structure.append(plane)
    unit = Q.coords_of_terms({(0, (0,) * J.nvars): F.one})
    return is_field(FinDimAlgebra(F, structure, unit, check=False))


def is_maximal_two_sided(I):
    """For a two-sided ideal I of finite codimension: is A[x]/I a simple algebra?"""
    from ..findim import FinDimAlgebra

    if I.is_full():
        return False
    FQ = FiniteQuotient(I)
    F = FQ.field
    mats, _ = FQ.image_algebra()
    if len(mats) != FQ.dim:
        return False    # not two-sided: the image algebra is larger than A[x]/I
    from ..fieldcore.linalg import Coordinatizer

    flat = [[c for row in M for c in row] for M in mats]
    coord = Coordinatizer(F, flat)
    structure = []
    for X in mats:
        plane = []
        for Y in mats:
            P = [[F.sum(F.mul(X[r][t], Y[t][c]) for t in range(len(X))) for c in range(len(X))]
                 for r in range(len(X))]
            plane.append(coord.coords([c for row in P for c in row]))
        structure.append(plane)
    ident = [[F.one if r == c else F.zero for c in range(FQ.dim)] for r in range(FQ.dim)]
    unit = coord.coords([c for row in ident for c in row])
    B = FinDimAlgebra(F, structure, unit, check=False)
    if radical(B):
        return False
    return len(wedderburn(B).factors) == 1


def random_center_ideal(F, n, rng, max_gens=2, max_deg=2):
    """A seeded random ideal of F[x_1..x_n] given by a few small generators."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, max_deg) for _ in range(n))
            terms[(0, e)] = F.random(rng)
        gens.append(ModVector(F, n, 1, terms))
    return Submodule(F, n, 1, gens)

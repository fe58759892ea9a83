"""Independent geometric route: intersect every directional ideal that contains I.

Points come from the Fitting ideal of the evaluated generator matrices and the
point enumerator; each directional ideal is built by Buchberger-Möller and the
intersection is done with module Gröbner eliminations.  Nothing here reuses
the joint-eigenvalue or quotient-kernel steps of the pipeline.
"""

import itertools

from ..errors import InternalInconsistency, NotSupported, NotZeroDimensional
from ..fieldcore.linalg import kernel_basis_raw
from ..findim import wedderburn
from ..leftideal import DirectionalPoint, LeftIdeal, directional_ideal, evaluate
from ..polymod import MPoly, Submodule, enumerate_points, intersect_submodules


def _poly_matrix(W, j, g, n):
    """Theta_j(g) as a k x k matrix of polynomials over E_j."""
    fac = W.factors[j]
    E, k = fac.field, fac.k
    entries = [[{} for _ in range(k)] for _ in range(k)]
    for e, c in g.terms.items():
        M = W.theta(j, list(c))
        for r in range(k):
            for s in range(k):
                if not E.is_zero(M[r][s]):
                    entries[r][s][e] = M[r][s]
    return [[MPoly(E, n, entries[r][s]) for s in range(k)] for r in range(k)]


def _det(rows):
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = None
    for s in range(k):
        minor = [row[:s] + row[s + 1:] for row in rows[1:]]
        term = rows[0][s] * _det(minor)
        if s % 2:
            term = -term
        total = term if total is None else total + term
    return total


def fitting_ideal(W, j, gens, n):
    """k x k minors of the stacked matrices Theta_j(g): they vanish exactly where some
    nonzero v is killed by every generator."""
    fac = W.factors[j]
    E, k = fac.field, fac.k
    rows = []
    for g in gens:
        rows.extend(_poly_matrix(W, j, g, n))
    rows = [r for r in rows if any(not p.is_zero() for p in r)]
    minors = []
    for choice in itertools.combinations(range(len(rows)), k):
        d = _det([rows[i] for i in choice])
        if not d.is_zero():
            minors.append({(0, e): c for e, c in d.terms.items()})
    return Submodule.from_terms(E, n, 1, minors)


def geometric_oracle(I, dmax=None, seed=0, return_points=False):
    """Intersection of J_{theta_j, xi, v} over all directional points with I inside J."""
    A = I.algebra
    n = I.nvars
    if A.field.order is None:
        raise NotSupported("the geometric oracle needs a finite base field", "nullsatz",
                           "geometric_oracle")
    if I.is_full():
        return (I, []) if return_points else I
    W = wedderburn(A, seed)
    gens = I.basis()
    points = []
    for j, fac in enumerate(W.factors):
        fit = fitting_ideal(W, j, gens, n)
        if fit.is_full():
            continue
        if fit.is_zero():
            raise NotZeroDimensional(f"factor {j}: every point is a zero", "nullsatz",
                                     "geometric_oracle")
        for L, xi in enumerate_points(fit, dmax):
            stacked = []
            for g in gens:
                stacked.extend(evaluate(W, g, j, xi, L))
            for v in kernel_basis_raw(L, stacked, fac.k):
                points.append(DirectionalPoint(j, L, tuple(xi), tuple(v)))
    if not points:
        raise InternalInconsistency("proper ideal without any directional point", "nullsatz",
                                    "geometric_oracle")
    module = None
    for P in points:
        J = directional_ideal(W, P, A, n).module
        module = J if module is None else intersect_submodules(module, J)
    out = LeftIdeal(A, n, Submodule(A.field, n, A.dim, module.basis))
    return (out, points) if return_points else out

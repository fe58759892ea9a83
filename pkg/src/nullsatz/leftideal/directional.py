"""Evaluation of algebra-valued polynomials through a simple factor, and the left ideals
{a : Theta_j(a)(xi) v = 0}."""

from dataclasses import dataclass

from ..errors import FactorIndexOutOfRange, InputError, ZeroVector
from ..fieldcore import embed, flatten
from ..polymod import kernel_submodule
from .ideal import LeftIdeal


@dataclass
class DirectionalPoint:
    """Factor index j, a point xi and a nonzero vector v, both over the field L."""

    j: int
    field: object
    xi: tuple
    v: tuple

    def to_json(self):
        L = self.field
        return {"factor": self.j, "field": L.to_json(),
                "xi": [L.elem_to_json(c) for c in self.xi],
                "v": [L.elem_to_json(c) for c in self.v]}


def _factor(W, j):
    if not 0 <= j < len(W.factors):
        raise FactorIndexOutOfRange(f"factor index {j} out of range 0..{len(W.factors) - 1}",
                                    "leftideal", "directional_ideal")
    return W.factors[j]


def _theta_over(W, j, a, L):
    fac = _factor(W, j)
    emb = embed(fac.field, L)
    return [[emb(c) for c in row] for row in W.theta(j, a)]


def _monomial_value(L, xi, exp):
    v = L.one
    for x, e in zip(xi, exp):
        if e:
            v = L.mul(v, L.pow(x, e))
    return v


def evaluate(W, a, j, xi, L=None):
    """Theta_j(a)(xi) as a k_j x k_j matrix over L (default: the factor's field)."""
    fac = _factor(W, j)
    L = L or fac.field
    k = fac.k
    out = [[L.zero] * k for _ in range(k)]
    for exp, coeff in a.terms.items():
        s = _monomial_value(L, xi, exp)
        T = _theta_over(W, j, list(coeff), L)
        for r in range(k):
            for c in range(k):
                if not L.is_zero(T[r][c]):
                    out[r][c] = L.add(out[r][c], L.mul(s, T[r][c]))
    return out


def _check_point(W, P):
    fac = _factor(W, P.j)
    L = P.field
    if len(P.v) != fac.k:
        raise InputError(f"direction vector must have length {fac.k}", "leftideal",
                         "directional_ideal")
    if all(L.is_zero(c) for c in P.v):
        raise ZeroVector("direction vector must be nonzero", "leftideal", "directional_ideal")
    return fac


def directional_ideal(W, P, A=None, n=None):
    """The left ideal J = {a : Theta_j(a)(xi) v = 0}, with its reduced Gröbner basis.

    J is the kernel of an F-linear map on A[x] that is compatible with
    multiplication by the (central) variables, so a Buchberger-Möller pass
    over the module terms b_i x^nu yields a complete basis.
    """
    A = A or W.algebra
    n = len(P.xi) if n is None else n
    if len(P.xi) != n:
        raise InputError("point has the wrong number of coordinates", "leftideal",
                         "directional_ideal")
    _check_point(W, P)
    L = P.field
    cols = []
    for i in range(A.dim):
        T = _theta_over(W, P.j, A.basis(i), L)
        cols.append([L.sum(L.mul(T[r][c], P.v[c]) for c in range(len(P.v))) for r in range(len(P.v))])

    def value(pos, exp):
        s = _monomial_value(L, P.xi, exp)
        out = []
        for c in cols[pos]:
            out.extend(flatten(L, L.mul(s, c)))
        return out

    target = len(P.v) * L.absolute_degree
    S = kernel_submodule(A.field, n, A.dim, value, target)
    return LeftIdeal(A, n, S)


def kills(W, P, a):
    """Does Theta_j(a)(xi) v vanish?"""
    L = P.field
    M = evaluate(W, a, P.j, P.xi, L)
    return all(L.is_zero(L.sum(L.mul(M[r][c], P.v[c]) for c in range(len(P.v))))
               for r in range(len(P.v)))

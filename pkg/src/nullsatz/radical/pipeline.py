"""Structural computation of rad(I) for a left ideal I of A[x_1..x_n].

Route: kill rad(A), split along the simple factors of A/rad A, pass to row
submodules over E_j[x] through B_j = M_k(E_j), find the support points as joint
eigenvalues of the multiplication matrices, intersect the row conditions
{r : r(xi) v = 0} inside the finite quotient, and pull everything back.
"""

from dataclasses import dataclass, field as dc_field

from ..errors import (DegreeBoundTooSmall, InternalInconsistency, NotSupported,
                      NotZeroDimensional)
from ..fieldcore import basis_over_prime, embed, finite_field, flatten
from ..fieldcore import upoly
from ..fieldcore.linalg import Coordinatizer, kernel_basis_raw, transpose
from ..findim import wedderburn
from ..leftideal import AlgPoly, DirectionalPoint, LeftIdeal, kills
from ..polymod import QuotientSpace, Submodule, is_zero_dimensional


@dataclass
class FactorIdeal:
    """Row submodule N_j of E_j[x]^k_j for one simple factor, and its radical."""

    j: int
    field: object
    k: int
    module: Submodule
    radical: Submodule = None
    degree_bound: int = 1


@dataclass
class RadicalResult:
    input: LeftIdeal
    output: LeftIdeal
    certificate: list = dc_field(default_factory=list)
    factors: list = dc_field(default_factory=list)
    dmax: int = 1

    def to_json(self):
        return {
            "input": self.input.gb_strings(),
            "radical": self.output.gb_strings(),
            "dmax": self.dmax,
            "certificate": [P.to_json() for P in self.certificate],
            "factors": [{"factor": f.j, "k": f.k, "field": f.field.to_json(),
                         "rows": [v.to_string() for v in f.module.basis],
                         "radical_rows": [v.to_string() for v in f.radical.basis]}
                        for f in self.factors],
        }


def morita_rows(W, j, gens, n):
    """Rows of Theta_j(g) for every generator g, as term dictionaries over E_j."""
    fac = W.factors[j]
    E, k = fac.field, fac.k
    rows = []
    for g in gens:
        mats = {e: W.theta(j, list(c)) for e, c in g.terms.items()}
        for r in range(k):
            terms = {(s, e): M[r][s] for e, M in mats.items() for s in range(k)
                     if not E.is_zero(M[r][s])}
            if terms:
                rows.append(terms)
    return rows


def morita_lift(W, j, row_terms, n):
    """The element of A[x] with Theta_j-image having first row r and zero elsewhere."""
    fac = W.factors[j]
    E, k = fac.field, fac.k
    A = W.algebra
    by_exp = {}
    for (s, e), c in row_terms.items():
        M = by_exp.setdefault(e, [[E.zero] * k for _ in range(k)])
        M[0][s] = c
    return AlgPoly(A, n, {e: W.lift(j, M) for e, M in by_exp.items()})


def _divisors(D):
    return [d for d in range(1, D + 1) if D % d == 0]


def _degree_over(L, q, x, e):
    for d in _divisors(e):
        if L.pow(x, q ** d) == x:
            return d
    return e


def _restrict(L, M, V):
    """Matrix of M on the invariant subspace spanned by the rows V."""
    coord = Coordinatizer(L, V)
    cols = []
    for v in V:
        w = [L.sum(L.mul(M[r][c], v[c]) for c in range(len(v))) for r in range(len(M))]
        cols.append(coord.coords(w))
    return [list(r) for r in zip(*cols)]


def joint_eigenpoints(E, mats, D):
    """Joint eigenvalues of commuting matrices over extensions of E of degree dividing D.

    Returns (L, xi) with xi of exact degree e over E and L of degree e over E,
    one representative per Frobenius orbit over E.
    """
    q = E.order
    p = E.characteristic
    m = E.absolute_degree
    N = len(mats[0]) if mats else 0
    out = []
    for e in _divisors(D):
        L = finite_field(p, e * m)
        emb = embed(E, L)
        Ts = [[[emb(c) for c in row] for row in transpose(M)] for M in mats]

        def rec(l, V, prefix):
            if l == len(Ts):
                yield prefix
                return
            R = _restrict(L, Ts[l], V)
            for lam in upoly.roots_finite(L, upoly.minpoly_of_matrix(L, R)):
                shifted = [[L.sub(R[r][c], lam) if r == c else R[r][c] for c in range(len(R))]
                           for r in range(len(R))]
                K = kernel_basis_raw(L, shifted, len(R))
                sub = [[L.sum(L.mul(kc, V[i][t]) for i, kc in enumerate(kv)) for t in range(N)]
                       for kv in K]
                yield from rec(l + 1, sub, prefix + (lam,))

        identity_rows = [[L.one if r == c else L.zero for c in range(N)] for r in range(N)]
        for xi in rec(0, identity_rows, ()):
            degs = [_degree_over(L, q, x, e) for x in xi]
            if _lcm(degs) != e:
                continue
            orbit = [tuple(L.pow(x, q ** i) for x in xi) for i in range(e)]
            if min(orbit, key=lambda pt: [L.sort_key(c) for c in pt]) != xi:
                continue
            out.append((L, xi))
    return out


def _lcm(xs):
    from math import lcm

    return lcm(*xs) if xs else 1


def _eval_rows(E, L, emb, rows, xi):
    G = []
    for v in rows:
        k = v.rank
        row = [L.zero] * k
        for (s, e), c in v.terms.items():
            val = emb(c)
            for x, t in zip(xi, e):
                if t:
                    val = L.mul(val, L.pow(x, t))
            row[s] = L.add(row[s], val)
        G.append(row)
    return G


def _radical_rows(fac_ideal, points_for_factor):
    """{r : r(xi) v = 0 for all certificate pairs} as a submodule containing N."""
    N = fac_ideal.module
    E = fac_ideal.field
    Q = QuotientSpace(N)
    zeta_basis = basis_over_prime(E)
    Fp = E.prime_field
    columns = []   # F-basis of Q: (standard term, zeta^i)
    for t in Q.terms:
        for z in zeta_basis:
            columns.append((t, z))
    rows = []
    for L, xi, vs in points_for_factor:
        emb = embed(E, L)
        for v in vs:
            images = []
            for (pos, e), z in columns:
                val = L.mul(emb(z), v[pos])
                for x, k in zip(xi, e):
                    if k:
                        val = L.mul(val, L.pow(x, k))
                images.append(flatten(L, val))
            for r in range(len(images[0]) if images else 0):
                rows.append([img[r] for img in images])
    ker = kernel_basis_raw(Fp, rows, len(columns)) if rows else (
        [[Fp.one if i == c else Fp.zero for i in range(len(columns))] for c in range(len(columns))])
    extra = []
    for kv in ker:
        terms = {}
        for c, ((t, z)) in zip(kv, columns):
            if Fp.is_zero(c):
                continue
            val = E.mul(embed(Fp, E)(c), z)
            terms[t] = E.add(terms[t], val) if t in terms else val
        terms = {t: c for t, c in terms.items() if not E.is_zero(c)}
        if terms:
            extra.append(terms)
    return Submodule.from_terms(E, N.nvars, N.rank, [v.terms for v in N.basis] + extra)


def rad_pipeline(I, dmax=None, seed=0, verify=True):
    """rad(I) with a certificate of directional points whose ideals cut it out."""
    A = I.algebra
    n = I.nvars
    F = A.field
    if F.order is None:
        raise NotSupported("the radical pipeline needs a finite base field", "nullsatz",
                           "rad_pipeline")
    W = wedderburn(A, seed)
    gens = I.basis()
    factors, certificate, rad_gens = [], [], []
    for r in W.radical:
        rad_gens.append(AlgPoly.const(A, n, r))
    bound = 1
    for j, fac in enumerate(W.factors):
        E, k = fac.field, fac.k
        N = Submodule.from_terms(E, n, k, morita_rows(W, j, gens, n))
        fi = FactorIdeal(j, E, k, N)
        if N.is_full():
            fi.radical = N
        else:
            ok, D = is_zero_dimensional(N)
            if not ok:
                raise NotZeroDimensional(f"row module of factor {j} is not zero-dimensional",
                                         "nullsatz", "rad_pipeline")
            fi.degree_bound = D
            bound = max(bound, D)
            if dmax is not None and D > dmax:
                raise DegreeBoundTooSmall(f"factor {j} has points of degree up to {D} > {dmax}",
                                          "nullsatz", "rad_pipeline")
            Q = QuotientSpace(N)
            mats = [Q.mult_matrix(l) for l in range(n)]
            found = []
            for L, xi in joint_eigenpoints(E, mats, D):
                emb = embed(E, L)
                G = _eval_rows(E, L, emb, N.basis, xi)
                K = kernel_basis_raw(L, G, k)
                if not K:
                    raise InternalInconsistency(f"support point {xi} has no kernel vector",
                                                "nullsatz", "rad_pipeline")
                found.append((L, xi, K))
                for v in K:
                    certificate.append(DirectionalPoint(j, L, tuple(xi), tuple(v)))
            if not found:
                raise InternalInconsistency(f"factor {j} has a proper row module but no points",
                                            "nullsatz", "rad_pipeline")
            fi.radical = _radical_rows(fi, found)
        factors.append(fi)
        for v in fi.radical.basis:
            rad_gens.append(morita_lift(W, j, v.terms, n))
    out = LeftIdeal.generate(A, n, rad_gens)
    result = RadicalResult(I, out, certificate, factors, dmax if dmax is not None else bound)
    if verify:
        _verify(W, result)
    return result


def _verify(W, result):
    I, out = result.input, result.output
    for g in I.module.basis:
        if not out.contains(g):
            raise InternalInconsistency("input is not contained in its radical", "nullsatz",
                                        "rad_pipeline")
    basis = out.basis()
    for P in result.certificate:
        for a in basis:
            if not kills(W, P, a):
                raise InternalInconsistency("certificate ideal does not contain the radical",
                                            "nullsatz", "rad_pipeline")
    if not result.certificate and not out.is_full():
        raise InternalInconsistency("proper radical without any directional point", "nullsatz",
                                    "rad_pipeline")

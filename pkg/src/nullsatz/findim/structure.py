"""Radical, Wedderburn splitting and Xi-map preimages of a finite-dimensional algebra."""

import itertools
import math
import random

from ..errors import NotAzumaya, NotSplit, SmallCharacteristic
from ..fieldcore import (QQ, ExtensionField, PrimeField, embed, finite_field, flatten)
from ..fieldcore import upoly
from ..fieldcore.linalg import (Coordinatizer, IncrementalBasis, inverse, kernel_basis_raw,
                                row_basis, solve_many, vecmat)
from .algebra import FinDimAlgebra
from .factor import crt_idempotents, factor

SMALL_CHAR_BUDGET = 1 << 16
SPLIT_ATTEMPTS = 32


# -- element helpers ----------------------------------------------------------------


def element_minpoly(A, y, unit=None):
    """Minimal polynomial of y inside the unital subalgebra with identity ``unit``."""
    F = A.field
    unit = A.one() if unit is None else unit
    basis = IncrementalBasis(F, A.dim)
    P = list(unit)
    k = 0
    while True:
        dep = basis.add(P, k)
        if dep is not None:
            coeffs = [F.zero] * (k + 1)
            coeffs[k] = F.one
            for tag, c in dep.items():
                coeffs[tag] = F.neg(c)
            return coeffs
        P = A.mul(P, y)
        k += 1


def poly_at(A, f, y, unit=None):
    unit = A.one() if unit is None else unit
    acc = A.zero()
    for c in reversed(f):
        acc = A.add(A.mul(acc, y), A.scale(c, unit))
    return acc


def span(A, vecs):
    return row_basis(A.field, [list(v) for v in vecs if not A.is_zero(v)])


def left_ideal_closure(A, vecs):
    """Smallest left ideal containing the given vectors."""
    basis = span(A, vecs)
    while True:
        new = span(A, basis + [A.mul(A.basis(i), v) for i in range(A.dim) for v in basis])
        if len(new) == len(basis):
            return new
        basis = new


def two_sided_closure(A, vecs):
    basis = span(A, vecs)
    while True:
        extra = [A.mul(A.basis(i), v) for i in range(A.dim) for v in basis]
        extra += [A.mul(v, A.basis(i)) for i in range(A.dim) for v in basis]
        new = span(A, basis + extra)
        if len(new) == len(basis):
            return new
        basis = new


def subspace_product(A, S, T):
    return span(A, [A.mul(s, t) for s in S for t in T])


def is_nilpotent_subspace(A, S):
    """For S closed under left multiplication by S: is S^m = 0 for some m?"""
    P = S
    while P:
        Q = subspace_product(A, S, P)
        if len(Q) == len(P):
            return False
        P = Q
    return True


def is_nilpotent_element(A, x):
    P = x
    for _ in range(A.dim + 1):
        if A.is_zero(P):
            return True
        P = A.mul(P, x)
    return A.is_zero(P)


# -- radical ------------------------------------------------------------------------


def trace_form(A):
    F = A.field
    traces = [F.sum(L[i][i] for i in range(A.dim)) for L in A.left_mats]
    return [[F.sum(F.mul(c, t) for c, t in zip(A.structure[i][j], traces))
             for j in range(A.dim)] for i in range(A.dim)]


def radical(A, budget=SMALL_CHAR_BUDGET):
    """Basis (in RREF) of the Jacobson radical of A."""
    return A.cached(("radical", budget), lambda: _radical(A, budget))


def _radical(A, budget):
    F = A.field
    K = row_basis(F, kernel_basis_raw(F, trace_form(A), A.dim))
    p = F.characteristic
    if not K or p == 0 or p > A.dim:
        return K
    # In small characteristic the trace-form kernel only contains the radical;
    # x lies in the radical iff the left ideal Ax is nilpotent.
    if F.order ** len(K) > budget:
        raise SmallCharacteristic(
            f"characteristic {p} <= dim {A.dim} and the search space has {F.order}^{len(K)} elements",
            "findim", "radical")
    found = IncrementalBasis(F, A.dim)
    rad = []
    for coeffs in itertools.product(F.elements(), repeat=len(K)):
        x = vecmat(F, list(coeffs), K)
        if A.is_zero(x) or found.contains(x) or not is_nilpotent_element(A, x):
            continue
        if is_nilpotent_subspace(A, left_ideal_closure(A, [x])):
            rad = two_sided_closure(A, rad + [x])
            found = IncrementalBasis(F, A.dim)
            for i, v in enumerate(rad):
                found.add(v, i)
    return rad


def is_semisimple(A):
    return not radical(A)


# -- quotient by the radical ------------------------------------------------------------


class RadicalQuotient:
    """B = A / rad A with explicit projection and a linear section."""

    def __init__(self, A, rad):
        F = A.field
        self.algebra = A
        self.rad = rad
        self._pivots = [next(i for i, c in enumerate(r) if not F.is_zero(c)) for r in rad]
        pivset = set(self._pivots)
        self.complement = [i for i in range(A.dim) if i not in pivset]
        if not rad:
            self.quotient = A
            return
        db = len(self.complement)
        structure = [[self.project(A.mul(A.basis(self.complement[i]), A.basis(self.complement[j])))
                      for j in range(db)] for i in range(db)]
        self.quotient = FinDimAlgebra(F, structure, self.project(A.one()),
                                      [A.names[i] for i in self.complement], check=False,
                                      label=f"{A.label or 'A'}/rad")

    def project(self, a):
        if not self.rad:
            return list(a)
        F = self.algebra.field
        a = list(a)
        for row, pc in zip(self.rad, self._pivots):
            c = a[pc]
            if not F.is_zero(c):
                a = [F.sub(x, F.mul(c, y)) for x, y in zip(a, row)]
        return [a[i] for i in self.complement]

    def lift(self, b):
        if not self.rad:
            return list(b)
        A = self.algebra
        a = A.zero()
        for i, c in zip(self.complement, b):
            a[i] = c
        return a


# -- Wedderburn decomposition ---------------------------------------------------------------


class SimpleFactor:
    """One simple factor B_j of A/rad A together with B_j = M_k(E)."""

    def __init__(self, index, field, k, m, idempotent, center_gen, center_minpoly, zeta,
                 theta_basis):
        self.index = index
        self.field = field          # E_j
        self.k = k
        self.m = m                  # [E_j : F]
        self.idempotent = idempotent  # central idempotent, in A coordinates (lifted)
        self.center_gen = center_gen  # primitive element of the center of B_j (B coordinates)
        self.center_minpoly = center_minpoly
        self.zeta = zeta            # image of center_gen in E_j
        self.theta_basis = theta_basis  # theta_j(b_i) for the basis of A

    def __repr__(self):
        return f"SimpleFactor(j={self.index}, M_{self.k}({self.field!r}))"


class WedderburnData:
    def __init__(self, A, rad, quotient, factors, phi_inverse):
        self.algebra = A
        self.radical = rad
        self.quotient = quotient
        self.factors = factors
        self._phi_inverse = phi_inverse

    def theta(self, j, a):
        """theta_j(a): the image of a in M_{k_j}(E_j)."""
        fac = self.factors[j]
        E, F = fac.field, self.algebra.field
        emb = embed(F, E)
        M = [[E.zero] * fac.k for _ in range(fac.k)]
        for c, T in zip(a, fac.theta_basis):
            if F.is_zero(c):
                continue
            ce = emb(c)
            for r in range(fac.k):
                for s in range(fac.k):
                    if not E.is_zero(T[r][s]):
                        M[r][s] = E.add(M[r][s], E.mul(ce, T[r][s]))
        return M

    def lift(self, j, M):
        """Element of A (in the chosen complement of rad A) mapping to M in factor j, 0 elsewhere."""
        F = self.algebra.field
        w = []
        for i, fac in enumerate(self.factors):
            for r in range(fac.k):
                for s in range(fac.k):
                    if i == j:
                        w.extend(flatten(fac.field, M[r][s]))
                    else:
                        w.extend([F.zero] * fac.m)
        return self.quotient.lift(vecmat(F, w, self._phi_inverse))

    def matrix_unit(self, j, r, s):
        fac = self.factors[j]
        E = fac.field
        M = [[E.one if (a, b) == (r, s) else E.zero for b in range(fac.k)] for a in range(fac.k)]
        return self.lift(j, M)

    def central_scalar(self, j, lam):
        """The central element lam * 1_j of A/rad A (lifted), for lam in E_j."""
        fac = self.factors[j]
        E = fac.field
        M = [[lam if a == b else E.zero for b in range(fac.k)] for a in range(fac.k)]
        return self.lift(j, M)


def wedderburn(A, seed=0):
    return A.cached(("wedderburn", seed), lambda: _wedderburn(A, seed))


def _candidates(A, basis, rng, attempts=SPLIT_ATTEMPTS):
    F = A.field
    for v in basis:
        yield v
    for u, v in itertools.combinations(basis, 2):
        yield A.add(u, v)
    for u, v in itertools.product(basis, repeat=2):
        yield A.mul(u, v)
    for _ in range(attempts):
        coeffs = [F.random(rng) if F.order else F.from_int(rng.randint(-3, 3)) for _ in basis]
        yield vecmat(F, coeffs, basis)


def _center_blocks(B, rng):
    F = B.field
    Z = B.center()
    pending = [B.one()]
    done = []
    while pending:
        e = pending.pop()
        Ze = span(B, [B.mul(e, z) for z in Z])
        for y in _candidates(B, Ze, rng):
            f = element_minpoly(B, y, e)
            facs = factor(F, f)
            if len(facs) > 1:
                for q in crt_idempotents(F, f, facs):
                    pending.append(poly_at(B, q, y, e))
                break
            if len(f) - 1 == len(Ze):
                done.append((e, y, f))
                break
        else:
            raise NotSplit("could not decompose the center into fields", "findim", "wedderburn")
    return done


def _center_field(F, g):
    """The field E = F[z]/(g) realized concretely, and the image of z in it."""
    m = len(g) - 1
    if m == 1:
        return F, F.neg(g[0])
    if isinstance(F, PrimeField):
        E = finite_field(F.p, m)
        roots = upoly.roots_finite(E, [embed(F, E)(c) for c in g])
        return E, roots[0]
    if F == QQ:
        E = ExtensionField(QQ, "c", g, check=False)
        return E, E.gen().value
    raise NotSplit(f"unsupported base field {F}", "findim", "wedderburn")


def _primitive_idempotent(B, e, m, rng):
    F = B.field
    f = e
    while True:
        C = span(B, [B.mul(B.mul(f, B.basis(i)), f) for i in range(B.dim)])
        if len(C) == m:
            return f
        for y in _candidates(B, C, rng):
            mp = element_minpoly(B, y, f)
            facs = factor(F, mp)
            if len(facs) > 1:
                pieces = [poly_at(B, q, y, f) for q in crt_idempotents(F, mp, facs)]
                pieces = [p for p in pieces if not B.is_zero(p)]
                f = min(pieces, key=lambda p: (len(span(B, [B.mul(B.mul(p, B.basis(i)), p)
                                                            for i in range(B.dim)])),
                                               [F.sort_key(c) for c in p]))
                break
        else:
            raise NotSplit("simple factor does not split over its center (division algebra)",
                           "findim", "wedderburn")


def _wedderburn(A, seed):
    F = A.field
    rng = random.Random(seed)
    rad = radical(A)
    Q = RadicalQuotient(A, rad)
    B = Q.quotient
    blocks = _center_blocks(B, rng)
    blocks.sort(key=lambda blk: (len(span(B, [B.mul(blk[0], B.basis(i)) for i in range(B.dim)])),
                                 [F.sort_key(c) for c in reversed(blk[0])]))
    factors = []
    phi_rows = [[] for _ in range(B.dim)]
    for j, (e, z, g) in enumerate(blocks):
        m = len(g) - 1
        Bj = span(B, [B.mul(e, B.basis(i)) for i in range(B.dim)])
        k = math.isqrt(len(Bj) // m)
        if k * k * m != len(Bj):
            raise NotSplit(f"factor of dimension {len(Bj)} is not a matrix algebra over its center",
                           "findim", "wedderburn")
        E, zeta = _center_field(F, g)
        f = _primitive_idempotent(B, e, m, rng)
        L = span(B, [B.mul(B.basis(i), f) for i in range(B.dim)])
        if len(L) != k * m:
            raise NotSplit("minimal left ideal has unexpected dimension", "findim", "wedderburn")
        inc = IncrementalBasis(F, B.dim)
        ordered = []
        for w in L:
            if inc.contains(w):
                continue
            chain = [w]
            for _ in range(m - 1):
                chain.append(B.mul(z, chain[-1]))
            for v in chain:
                inc.add(v, len(ordered))
                ordered.append(v)
            if len(ordered) == k * m:
                break
        gens = ordered[::m]
        coord = Coordinatizer(F, ordered)
        emb = embed(F, E)
        zpow = [E.one]
        for _ in range(m - 1):
            zpow.append(E.mul(zpow[-1], zeta))

        def phi(b, gens=gens, coord=coord, emb=emb, zpow=zpow, k=k, m=m, E=E):
            M = [[E.zero] * k for _ in range(k)]
            for c, l in enumerate(gens):
                x = coord.coords(B.mul(b, l))
                for r in range(k):
                    acc = E.zero
                    for s in range(m):
                        coef = x[r * m + s]
                        if not F.is_zero(coef):
                            acc = E.add(acc, E.mul(emb(coef), zpow[s]))
                    M[r][c] = acc
            return M

        for i in range(B.dim):
            M = phi(B.basis(i))
            for r in range(k):
                for s in range(k):
                    phi_rows[i].extend(flatten(E, M[r][s]))
        theta_basis = [phi(Q.project(A.basis(i))) for i in range(A.dim)]
        factors.append(SimpleFactor(j, E, k, m, Q.lift(e), z, g, zeta, theta_basis))
    phi_inv = inverse(F, phi_rows)
    return WedderburnData(A, rad, Q, factors, phi_inv)


# -- dual bases and Xi preimages ----------------------------------------------------------------


class DualBasisData:
    """Dual basis (v_i, omega_i) of A over its center, with Xi-map preimages.

    ``functionals[i]`` is a d x d matrix W with omega_i(x) = W x, an element of
    the center of A.  ``preimages[i]`` is a list of pairs (e, f) with
    sum e x f = omega_i(x) for every x.
    """

    def __init__(self, algebra, vectors, functionals, preimages, kind):
        self.algebra = algebra
        self.vectors = vectors
        self.functionals = functionals
        self.preimages = preimages
        self.kind = kind

    def omega(self, i, x):
        from ..fieldcore.linalg import matvec

        return matvec(self.algebra.field, self.functionals[i], x)

    def check(self):
        """Exact verification of both identities on every basis element."""
        A = self.algebra
        for c in range(A.dim):
            x = A.basis(c)
            acc = A.zero()
            for i, v in enumerate(self.vectors):
                acc = A.add(acc, A.mul(self.omega(i, x), v))
                lhs = A.zero()
                for e, f in self.preimages[i]:
                    lhs = A.add(lhs, A.mul(A.mul(e, x), f))
                if lhs != self.omega(i, x):
                    return False, ("xi", i, c)
            if acc != x:
                return False, ("dual", c)
        return True, None


def xi_preimage(A):
    return A.cached("xi", lambda: _xi_preimage(A))


def _coordinate_dual(A):
    F = A.field
    vectors = [A.basis(i) for i in range(A.dim)]
    functionals = []
    for i in range(A.dim):
        W = [[F.mul(u, F.one) if c == i else F.zero for c in range(A.dim)] for u in A.unit]
        functionals.append(W)
    return vectors, functionals, "coordinate"


def _matrix_unit_dual(A, W):
    F = A.field
    vectors, functionals = [], []
    for j, fac in enumerate(W.factors):
        for r in range(fac.k):
            for s in range(fac.k):
                vectors.append(W.matrix_unit(j, r, s))
                cols = [W.central_scalar(j, W.theta(j, A.basis(c))[r][s]) for c in range(A.dim)]
                functionals.append([[cols[c][row] for c in range(A.dim)] for row in range(A.dim)])
    return vectors, functionals, "matrix-unit"


def _xi_preimage(A):
    F = A.field
    d = A.dim
    if A.is_central() or radical(A):
        vectors, functionals, kind = _coordinate_dual(A)
    else:
        vectors, functionals, kind = _matrix_unit_dual(A, wedderburn(A))
    # Xi(sum t_ab b_a (x) b_b)(x) = sum t_ab b_a x b_b; match against omega_i on every basis x
    triple = [[[A.mul(A.mul(A.basis(a), A.basis(c)), A.basis(b)) for b in range(d)]
               for c in range(d)] for a in range(d)]
    rows = []
    for c in range(d):
        for k in range(d):
            rows.append([triple[a][c][b][k] for a in range(d) for b in range(d)])
    rhs = [[W[k][c] for c in range(d) for k in range(d)] for W in functionals]
    sols = solve_many(F, rows, rhs)
    preimages = []
    for i, t in enumerate(sols):
        if t is None:
            raise NotAzumaya(f"functional {i} is not in the image of the Xi map", "findim",
                             "xi_preimage")
        pairs = []
        for a in range(d):
            fpart = t[a * d:(a + 1) * d]
            if any(not F.is_zero(x) for x in fpart):
                pairs.append((A.basis(a), list(fpart)))
        preimages.append(pairs)
    return DualBasisData(A, vectors, functionals, preimages, kind)

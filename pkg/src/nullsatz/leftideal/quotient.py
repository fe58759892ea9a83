"""Finite-dimensional quotients A[x]/I and the semiprime, prime and maximal predicates."""

import itertools
import random

from ..errors import NotZeroDimensional, TooLargeForExhaustion
from ..findim import Verdict, is_simple_module
from ..findim.ideals import EXHAUSTION_BUDGET, SAMPLE_TRIALS
from ..fieldcore.linalg import (IncrementalBasis, kernel_basis_raw, matvec, row_basis, solve)
from ..polymod import QuotientSpace, exp_add, is_zero_dimensional
from .algpoly import AlgPoly


class FiniteQuotient:
    """Q = A[x]/I as an F-vector space with the action of the b_i and the x_l.

    The image of A[x] in End_F(Q) is the finite-dimensional algebra A[x]/[I : A[x]];
    the predicates below run inside it, which is exact because [I : A[x]] is a
    two-sided ideal contained in I.
    """

    def __init__(self, I):
        ok, _ = is_zero_dimensional(I.module)
        if not ok:
            raise NotZeroDimensional("A[x]/I is infinite-dimensional", "leftideal", "FiniteQuotient")
        self.ideal = I
        A = self.algebra = I.algebra
        self.field = F = A.field
        self.space = Q = QuotientSpace(I.module)
        self.dim = Q.dim
        self.one = Q.coords_of_terms(AlgPoly.const(A, I.nvars, A.one()).to_vector().terms)
        self.alg_action = []
        for i in range(A.dim):
            M = [[F.zero] * Q.dim for _ in range(Q.dim)]
            for c, (pos, e) in enumerate(Q.terms):
                prod = A.mul(A.basis(i), A.basis(pos))
                col = Q.coords_of_terms({(k, e): y for k, y in enumerate(prod) if not F.is_zero(y)})
                for r in range(Q.dim):
                    M[r][c] = col[r]
            self.alg_action.append(M)
        self.var_action = [Q.mult_matrix(l) for l in range(I.nvars)]
        self._image = None

    @property
    def size(self):
        return self.field.order ** self.dim if self.field.order else None

    def coords(self, a):
        return self.space.coords(a.to_vector())

    def element(self, q):
        """An AlgPoly whose class is q."""
        return AlgPoly.from_terms(self.algebra, self.ideal.nvars, self.space.element(q))

    def image_algebra(self):
        """Spanning matrices of the image of A[x] in End(Q), tagged by monomials b_i x^nu."""
        if self._image is not None:
            return self._image
        F, N, A = self.field, self.dim, self.algebra
        n = self.ideal.nvars
        inc = IncrementalBasis(F, N * N)
        mats, tags = [], []

        def offer(M, i, e):
            if inc.add([c for row in M for c in row], len(mats)) is None:
                mats.append(M)
                tags.append((i, e))
                return True
            return False

        frontier = []
        for i, M in enumerate(self.alg_action):
            if offer(M, i, (0,) * n):
                frontier.append(len(mats) - 1)
        while frontier:
            nxt = []
            for idx in frontier:
                i, e = tags[idx]
                for l, X in enumerate(self.var_action):
                    step = tuple(1 if t == l else 0 for t in range(n))
                    P = _matmul(F, X, mats[idx])
                    if offer(P, i, exp_add(e, step)):
                        nxt.append(len(mats) - 1)
            frontier = nxt
        self._image = (mats, [AlgPoly.monomial(A, n, A.basis(i), e) for i, e in tags])
        return self._image


def _matmul(F, X, Y):
    n = len(X)
    out = [[F.zero] * n for _ in range(n)]
    for r in range(n):
        for k in range(n):
            x = X[r][k]
            if F.is_zero(x):
                continue
            Yk = Y[k]
            row = out[r]
            for c in range(n):
                if not F.is_zero(Yk[c]):
                    row[c] = F.add(row[c], F.mul(x, Yk[c]))
    return out


def _projective_points(F, N):
    """Nonzero vectors of F^N with first nonzero coordinate 1."""
    for lead in range(N):
        for tail in itertools.product(F.elements(), repeat=N - lead - 1):
            v = [F.zero] * lead + [F.one] + list(tail)
            yield v


def _ann_of_cyclic(FQ, q):
    """Kernel coefficients c with (sum c_k B_k) B q = 0, plus the spanning matrices."""
    F = FQ.field
    mats, tags = FQ.image_algebra()
    Mq = row_basis(F, [matvec(F, M, q) for M in mats])
    rows = []
    for m in Mq:
        cols = [matvec(F, M, m) for M in mats]
        for r in range(FQ.dim):
            rows.append([col[r] for col in cols])
    return kernel_basis_raw(F, rows, len(mats)) if rows else None


def _combine(FQ, coeffs):
    _, tags = FQ.image_algebra()
    A, n = FQ.algebra, FQ.ideal.nvars
    out = AlgPoly(A, n)
    for c, t in zip(coeffs, tags):
        if not FQ.field.is_zero(c):
            out = out + AlgPoly.scalar(A, n, c) * t
    return out


def _ann_images(FQ, ker):
    F = FQ.field
    mats, _ = FQ.image_algebra()
    ones = [matvec(F, M, FQ.one) for M in mats]
    if ker is None:
        ker = [[F.one if i == k else F.zero for i in range(len(mats))] for k in range(len(mats))]
    imgs = []
    for c in ker:
        v = [F.zero] * FQ.dim
        for ck, o in zip(c, ones):
            if not F.is_zero(ck):
                v = [F.add(x, F.mul(ck, y)) for x, y in zip(v, o)]
        imgs.append(v)
    return ker, imgs


def _points(FQ, exact, budget, trials, seed, op):
    F = FQ.field
    if exact:
        if F.order is None:
            raise TooLargeForExhaustion("exhaustion needs a finite field", "leftideal", op)
        if F.order ** FQ.dim > budget:
            raise TooLargeForExhaustion(f"{F.order}^{FQ.dim} cases exceed the budget {budget}",
                                        "leftideal", op)
        return _projective_points(F, FQ.dim)
    rng = random.Random(seed)
    return ([F.random(rng) for _ in range(FQ.dim)] for _ in range(trials))


def _exact_semiprime(FQ, exact=True, budget=EXHAUSTION_BUDGET, trials=SAMPLE_TRIALS, seed=0):
    # a A[x] a in I means a kills the cyclic submodule A[x](a.1); look for a with a.1 = q
    F = FQ.field
    count = 0
    for q in _points(FQ, exact, budget, trials, seed, "is_semiprime_left_witnessed"):
        if all(F.is_zero(c) for c in q):
            continue
        count += 1
        ker, imgs = _ann_images(FQ, _ann_of_cyclic(FQ, q))
        if not imgs:
            continue
        sol = solve(F, [list(col) for col in zip(*imgs)], q)
        if sol is not None:
            coeffs = [F.zero] * len(ker[0])
            for s, c in zip(sol, ker):
                coeffs = [F.add(x, F.mul(s, y)) for x, y in zip(coeffs, c)]
            return Verdict(False, exact, _combine(FQ, coeffs), count)
    return Verdict(True, exact, trials=count)


def is_semiprime_left_witnessed(I, candidates=None, exact=True, budget=EXHAUSTION_BUDGET,
                                trials=SAMPLE_TRIALS, seed=0):
    """Search for a not in I with a A[x] a in I.

    With explicit candidates each one is tested (the variables being central,
    a A[x] a lies in I as soon as every a b_i a does).  Without candidates
    A[x]/I must be finite-dimensional and the search is exhaustive over it
    when ``exact`` (sampled otherwise).
    """
    A = I.algebra
    if I.is_full():
        return Verdict(True, True, detail={"reason": "full ring"})
    if candidates is not None:
        for count, a in enumerate(candidates, 1):
            if I.contains(a):
                continue
            if all(I.contains(a * AlgPoly.basis(A, I.nvars, i) * a) for i in range(A.dim)):
                return Verdict(False, False, a, count)
        return Verdict(True, False, trials=len(candidates),
                       detail={"scope": "relative to the candidate family"})
    return _exact_semiprime(FiniteQuotient(I), exact, budget, trials, seed)


def is_prime_left_witnessed(I, exact=True, budget=EXHAUSTION_BUDGET, trials=SAMPLE_TRIALS, seed=0):
    """Search for a, b outside I with a A[x] b in I (A[x]/I finite-dimensional)."""
    if I.is_full():
        return Verdict(False, True, detail={"reason": "I is not proper"})
    FQ = FiniteQuotient(I)
    F = FQ.field
    count = 0
    for q in _points(FQ, exact, budget, trials, seed, "is_prime_left_witnessed"):
        if all(F.is_zero(c) for c in q):
            continue
        count += 1
        ker, imgs = _ann_images(FQ, _ann_of_cyclic(FQ, q))
        for c, v in zip(ker, imgs):
            if not all(F.is_zero(x) for x in v):
                return Verdict(False, exact, (_combine(FQ, c), FQ.element(q)), count)
    return Verdict(True, exact, trials=count)


def is_maximal_left(I, budget=EXHAUSTION_BUDGET):
    """Is A[x]/I a simple module (exhaustive over the finite quotient)?"""
    if I.is_full():
        return Verdict(False, True, detail={"reason": "I is not proper"})
    FQ = FiniteQuotient(I)
    ok = is_simple_module(FQ.field, FQ.alg_action + FQ.var_action, FQ.dim, budget)
    return Verdict(ok, True, detail={"codim": FQ.dim})

"""Left ideals of a finite-dimensional algebra: quotients, annihilators and predicates."""

import itertools
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from ..errors import InputError, NotSimpleModule, NotSupported, TooLargeForExhaustion, ZeroVector
from ..fieldcore import PrimeField
from ..fieldcore.linalg import (identity, in_rowspace, kernel_basis_raw, matvec, rank, row_basis,
                                vecmat)
from .structure import left_ideal_closure, radical, span, two_sided_closure, wedderburn

EXHAUSTION_BUDGET = 1 << 20
SAMPLE_TRIALS = 10_000


def _pivots(F, rows):
    return [next(i for i, c in enumerate(r) if not F.is_zero(c)) for r in rows]


def annihilator_rows(F, basis, n):
    """Functionals phi (rows) with phi . v = 0 exactly for v in span(basis)."""
    if not basis:
        return identity(F, n)
    return kernel_basis_raw(F, basis, n)


def coset_representatives(F, basis, n):
    """One representative of every coset of F^n / span(basis)."""
    piv = set(_pivots(F, basis))
    free = [i for i in range(n) if i not in piv]
    for coeffs in itertools.product(F.elements(), repeat=len(free)):
        v = [F.zero] * n
        for i, c in zip(free, coeffs):
            v[i] = c
        yield v


class LeftIdealFD:
    """A left ideal of a finite-dimensional algebra, stored as an RREF basis."""

    def __init__(self, algebra, vectors, check=True):
        self.algebra = A = algebra
        self.basis = row_basis(A.field, [list(v) for v in vectors])
        self._pivots = _pivots(A.field, self.basis)
        if check:
            for v in self.basis:
                for i in range(A.dim):
                    if not self.contains(A.mul(A.basis(i), v)):
                        raise InputError("subspace is not closed under left multiplication",
                                         "findim", "LeftIdealFD")

    @classmethod
    def generated_by(cls, algebra, gens):
        return cls(algebra, left_ideal_closure(algebra, gens), check=False)

    @property
    def dim(self):
        return len(self.basis)

    @property
    def codim(self):
        return self.algebra.dim - len(self.basis)

    def contains(self, v):
        return in_rowspace(self.algebra.field, self.basis, self._pivots, v)

    def __eq__(self, other):
        return (isinstance(other, LeftIdealFD) and self.algebra is other.algebra
                and self.basis == other.basis)

    def __hash__(self):
        return hash(tuple(map(tuple, self.basis)))

    def __le__(self, other):
        return all(other.contains(v) for v in self.basis)

    def key(self):
        return tuple(map(tuple, self.basis))

    def annihilator(self):
        return annihilator_rows(self.algebra.field, self.basis, self.algebra.dim)

    def __repr__(self):
        return f"LeftIdealFD([{', '.join(self.algebra.format(v) for v in self.basis)}])"


def _solution_space(A, conditions):
    """Subspace {a : phi . (M a) = 0} for the given (phi-rows, matrix M) pairs."""
    F = A.field
    rows = []
    for Phi, M in conditions:
        rows.extend([vecmat(F, phi, M) for phi in Phi])
    return row_basis(F, kernel_basis_raw(F, rows, A.dim)) if rows else identity(F, A.dim)


def ideal_quotient(I):
    """[I : A] = {a : a A in I}, the largest two-sided ideal inside I."""
    A = I.algebra
    Phi = I.annihilator()
    Q = _solution_space(A, [(Phi, R) for R in A.right_mats])
    return LeftIdealFD(A, Q, check=False)


def perp(I, quotient=None):
    """I^perp = {b : I b in [I:A]}, a right ideal."""
    A = I.algebra
    Q = quotient or ideal_quotient(I)
    Psi = Q.annihilator()
    return _solution_space(A, [(Psi, A.left_matrix(u)) for u in I.basis])


def double_annihilator_check(I):
    """Does I = {a : a I^perp in [I:A]} hold?  Returns (verdict, witness or None)."""
    A = I.algebra
    Q = ideal_quotient(I)
    P = perp(I, Q)
    Psi = Q.annihilator()
    S = _solution_space(A, [(Psi, A.right_matrix(w)) for w in P])
    S_ideal = LeftIdealFD(A, S, check=False)
    for v in S:
        if not I.contains(v):
            return False, v
    for v in I.basis:
        if not S_ideal.contains(v):
            return False, v
    return True, None


@dataclass
class Verdict:
    """Outcome of a predicate check; truthy iff the property holds (or was not refuted)."""

    holds: bool
    exact: bool
    witness: object = None
    trials: int = 0
    detail: dict = dc_field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _budget_check(count, budget, op):
    if count > budget:
        raise TooLargeForExhaustion(f"{count} cases exceed the exhaustion budget {budget}",
                                    "findim", op)


def _prime_field_arrays(A, Phi):
    """T[(i,h), j, l] = phi_h . (b_j b_i b_l), as an integer array."""
    d = A.dim
    T = np.zeros((d * len(Phi), d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            bj_bi = A.mul(A.basis(j), A.basis(i))
            for l in range(d):
                v = A.mul(bj_bi, A.basis(l))
                for h, phi in enumerate(Phi):
                    T[i * len(Phi) + h, j, l] = sum(x * y for x, y in zip(phi, v))
    return T


def _all_vectors(p, d, chunk=1 << 14):
    total = p ** d
    powers = p ** np.arange(d, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % p


def is_semiprime_left(I, exact=True, budget=EXHAUSTION_BUDGET, trials=SAMPLE_TRIALS, seed=0):
    """Is aAa in I only for a in I?"""
    A = I.algebra
    F = A.field
    Phi = I.annihilator()
    if not Phi:
        return Verdict(True, True)
    if exact:
        if F.order is None:
            raise TooLargeForExhaustion("exhaustion needs a finite field", "findim", "is_semiprime_left")
        _budget_check(F.order ** A.dim, budget, "is_semiprime_left")
        if isinstance(F, PrimeField):
            p = F.p
            T = _prime_field_arrays(A, Phi)
            P = np.array(Phi, dtype=np.int64)
            for X in _all_vectors(p, A.dim):
                outside = (X @ P.T % p).any(axis=1)
                vals = np.einsum("nj,nl,xjl->nx", X, X, T) % p
                bad = outside & ~vals.any(axis=1)
                if bad.any():
                    w = [int(c) for c in X[np.argmax(bad)]]
                    return Verdict(False, True, w)
            return Verdict(True, True, trials=p ** A.dim)
        elems = A.elements()
    else:
        rng = random.Random(seed)
        elems = ([F.random(rng) for _ in range(A.dim)] for _ in range(trials))
    count = 0
    for a in elems:
        count += 1
        if I.contains(a):
            continue
        if all(I.contains(A.mul(A.mul(a, A.basis(i)), a)) for i in range(A.dim)):
            return Verdict(False, exact, a, count)
    return Verdict(True, exact, trials=count)


def is_prime_left(I, exact=True, budget=EXHAUSTION_BUDGET, trials=SAMPLE_TRIALS, seed=0):
    """Is aAb in I only for a in I or b in I?

    For fixed b the admissible a form a subspace, and it only depends on b mod I,
    so exhaustion runs over coset representatives of A/I.
    """
    A = I.algebra
    F = A.field
    Phi = I.annihilator()
    if not Phi:
        return Verdict(False, True, detail={"reason": "I = A is not proper"})
    if exact:
        if F.order is None:
            raise TooLargeForExhaustion("exhaustion needs a finite field", "findim", "is_prime_left")
        _budget_check(F.order ** I.codim, budget, "is_prime_left")
        reps = coset_representatives(F, I.basis, A.dim)
    else:
        rng = random.Random(seed)
        reps = ([F.random(rng) for _ in range(A.dim)] for _ in range(trials))
    count = 0
    for b in reps:
        count += 1
        if I.contains(b):
            continue
        # a -> a b_i b must land in I for all i
        S = _solution_space(A, [(Phi, A.right_matrix(A.mul(A.basis(i), b))) for i in range(A.dim)])
        for a in S:
            if not I.contains(a):
                return Verdict(False, exact, (a, b), count)
    return Verdict(True, exact, trials=count)


def is_simple_module(F, action, n, budget=EXHAUSTION_BUDGET):
    """Is F^n simple under the given matrices?  Every nonzero w must generate F^n."""
    if n == 0:
        return False
    if F.order is None:
        raise NotSupported("module simplicity is only decided over finite fields", "findim",
                           "is_simple_module")
    _budget_check(F.order ** n, budget, "is_simple_module")
    seen = set()
    for w in itertools.product(F.elements(), repeat=n):
        w = list(w)
        if all(F.is_zero(c) for c in w):
            continue
        lead = next(c for c in w if not F.is_zero(c))
        w = [F.div(c, lead) for c in w]
        key = tuple(w)
        if key in seen:
            continue
        sub = row_basis(F, [w])
        while True:
            new = row_basis(F, sub + [matvec(F, M, v) for M in action for v in sub])
            if len(new) == len(sub):
                break
            sub = new
        if len(sub) < n:
            return False
        seen.add(key)
    return True


def ann_maximal_check(A, action, m):
    """Is ann(m) a maximal left ideal, for m in a simple module?

    ``action[i]`` is the matrix of b_i on the module.  Returns the verdict and the
    annihilator ideal.
    """
    F = A.field
    n = len(m)
    if all(F.is_zero(c) for c in m):
        raise ZeroVector("m must be nonzero", "findim", "ann_maximal_check")
    if len(action) != A.dim:
        raise InputError("one action matrix per basis element is required", "findim",
                         "ann_maximal_check")
    if not is_simple_module(F, action, n):
        raise NotSimpleModule("the given action does not define a simple module", "findim",
                              "ann_maximal_check")
    images = [matvec(F, M, m) for M in action]
    cols = [list(r) for r in zip(*images)]  # n x d matrix of a -> a.m
    ann = LeftIdealFD(A, kernel_basis_raw(F, cols, A.dim), check=True)
    # A / ann(m) as a module: left multiplication on coset coordinates
    reps = [A.basis(i) for i in range(A.dim) if i not in set(_pivots(F, ann.basis))]
    from ..fieldcore.linalg import Coordinatizer

    coord = Coordinatizer(F, ann.basis + reps)
    q = len(reps)
    quotient_action = []
    for i in range(A.dim):
        M = [[F.zero] * q for _ in range(q)]
        for c, r in enumerate(reps):
            x = coord.coords(A.mul(A.basis(i), r))[len(ann.basis):]
            for row in range(q):
                M[row][c] = x[row]
        quotient_action.append(M)
    return is_simple_module(F, quotient_action, q), ann


# -- submodules of free modules over commutative algebras -------------------------------------


def _module_mul(R, r, x, rank_):
    d = R.dim
    out = []
    for i in range(rank_):
        out.extend(R.mul(r, x[i * d:(i + 1) * d]))
    return out


def _check_submodule(R, rank_, N):
    F = R.field
    if not R.is_commutative():
        raise InputError("coefficient ring must be commutative", "findim", "submodule")
    basis = row_basis(F, N)
    piv = _pivots(F, basis)
    for v in basis:
        for i in range(R.dim):
            if not in_rowspace(F, basis, piv, _module_mul(R, R.basis(i), v, rank_)):
                raise InputError("subspace is not an R-submodule", "findim", "submodule")
    return basis, piv


def is_semiprime_submodule(R, rank_, N, budget=EXHAUSTION_BUDGET):
    """Semiprimeness of N in R^rank via the coordinate dual basis:
    N is semiprime iff omega_i(x) x in N for all i forces x in N."""
    F = R.field
    basis, piv = _check_submodule(R, rank_, N)
    n = rank_ * R.dim
    if F.order is None:
        raise TooLargeForExhaustion("exhaustion needs a finite field", "findim",
                                    "is_semiprime_submodule")
    _budget_check(F.order ** n, budget, "is_semiprime_submodule")
    for x in itertools.product(F.elements(), repeat=n):
        x = list(x)
        if in_rowspace(F, basis, piv, x):
            continue
        comps = [x[i * R.dim:(i + 1) * R.dim] for i in range(rank_)]
        if all(in_rowspace(F, basis, piv, _module_mul(R, c, x, rank_)) for c in comps):
            return Verdict(False, True, x)
    return Verdict(True, True)


def is_prime_submodule(R, rank_, N, budget=EXHAUSTION_BUDGET):
    """Prime: r m in N implies r M in N or m in N."""
    F = R.field
    basis, piv = _check_submodule(R, rank_, N)
    n = rank_ * R.dim
    if len(basis) == n:
        return Verdict(False, True, detail={"reason": "N = M is not proper"})
    if F.order is None:
        raise TooLargeForExhaustion("exhaustion needs a finite field", "findim", "is_prime_submodule")
    _budget_check(F.order ** (n - len(basis)), budget, "is_prime_submodule")
    Phi = annihilator_rows(F, basis, n)

    def mult_matrix(m):
        # r -> r m as an n x d matrix
        cols = [_module_mul(R, R.basis(i), m, rank_) for i in range(R.dim)]
        return [list(r) for r in zip(*cols)]

    # (N : M) = {r : r e_t in N for every unit vector e_t}
    units = []
    for t in range(rank_):
        e = [F.zero] * n
        e[t * R.dim:(t + 1) * R.dim] = R.one()
        units.append(e)
    colon_M = _solution_space(R, [(Phi, mult_matrix(e)) for e in units])
    cpiv = _pivots(F, colon_M)
    for m in coset_representatives(F, basis, n):
        if in_rowspace(F, basis, piv, m):
            continue
        for r in _solution_space(R, [(Phi, mult_matrix(m))]):
            if not in_rowspace(F, colon_M, cpiv, r):
                return Verdict(False, True, (r, m))
    return Verdict(True, True)


# -- exhaustive ideal enumeration ------------------------------------------------------------


def _enumerate(A, closure, budget):
    F = A.field
    if F.order is None:
        raise NotSupported("ideal enumeration needs a finite field", "findim", "enumerate")
    _budget_check(F.order ** A.dim, budget, "enumerate")
    start = closure(A, [])
    seen = {tuple(map(tuple, start)): start}
    queue = [start]
    while queue:
        I = queue.pop()
        for a in coset_representatives(F, I, A.dim):
            if all(F.is_zero(c) for c in a):
                continue
            J = closure(A, I + [a])
            key = tuple(map(tuple, J))
            if key not in seen:
                seen[key] = J
                queue.append(J)
    return sorted(seen.values(), key=lambda J: (len(J), [[F.sort_key(c) for c in r] for r in J]))


def left_ideals(A, budget=1 << 16):
    return [LeftIdealFD(A, J, check=False) for J in _enumerate(A, left_ideal_closure, budget)]


def two_sided_ideals(A, budget=1 << 16):
    return [LeftIdealFD(A, J, check=False) for J in _enumerate(A, two_sided_closure, budget)]


def _maximal(ideals, d):
    proper = [I for I in ideals if I.dim < d]
    return [I for I in proper if not any(J.dim > I.dim and I <= J for J in proper)]


def maximal_left_ideals(A, budget=1 << 16):
    return _maximal(left_ideals(A, budget), A.dim)


def maximal_two_sided_ideals(A, budget=1 << 16):
    return _maximal(two_sided_ideals(A, budget), A.dim)


def is_maximal_left(I):
    """Maximal iff A/I is a simple module."""
    A = I.algebra
    F = A.field
    if I.codim == 0:
        return False
    reps = [A.basis(i) for i in range(A.dim) if i not in set(I._pivots)]
    from ..fieldcore.linalg import Coordinatizer

    coord = Coordinatizer(F, I.basis + reps)
    q = len(reps)
    action = []
    for i in range(A.dim):
        cols = [coord.coords(A.mul(A.basis(i), r))[len(I.basis):] for r in reps]
        action.append([list(r) for r in zip(*cols)])
    return is_simple_module(F, action, q)


def is_field(A):
    """Is the commutative algebra A a field?"""
    F = A.field
    if not A.is_commutative():
        return False
    if isinstance(F, PrimeField):
        p = F.p
        frob = [A.pow(A.basis(i), p) for i in range(A.dim)]  # images of basis, F_p-linear
        if rank(F, frob) < A.dim:
            return False
        fixed = [[F.sub(frob[i][k], F.one if i == k else F.zero) for k in range(A.dim)]
                 for i in range(A.dim)]
        return A.dim - rank(F, fixed) == 1
    if radical(A):
        return False
    W = wedderburn(A)
    return len(W.factors) == 1 and W.factors[0].k == 1


def center_intersection(I):
    """I intersected with the center of A, as an RREF basis."""
    A = I.algebra
    F = A.field
    Z = A.center()
    Phi = I.annihilator()
    # coefficients c with sum c_i z_i in I
    rows = [[sum_prod(F, phi, z) for z in Z] for phi in Phi]
    coeffs = kernel_basis_raw(F, rows, len(Z)) if rows else identity(F, len(Z))
    return row_basis(F, [vecmat(F, c, Z) for c in coeffs])


def sum_prod(F, u, v):
    acc = F.zero
    for x, y in zip(u, v):
        if not F.is_zero(x) and not F.is_zero(y):
            acc = F.add(acc, F.mul(x, y))
    return acc

"""The first Weyl algebra Q<x, y>/(yx - xy - 1) in PBW normal form sum c_ij x^i y^j.

Also an exact check of a family of identities in this algebra, together with
a certified proof that x does not lie in the left ideal A*(yx).
"""

import random
from fractions import Fraction
from math import comb, factorial

from .errors import IdentityFailed
from .fieldcore import QQ
from .fieldcore.linalg import solve


class WeylElem:
    """sum c_ij x^i y^j; ``terms`` maps (i, j) to nonzero Fractions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {(int(i), int(j)): Fraction(c) for (i, j), c in (terms or {}).items() if c}

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def _coerce(self, other):
        return other if isinstance(other, WeylElem) else WeylElem.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return WeylElem(terms)

    __radd__ = __add__

    def __neg__(self):
        return WeylElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return weyl_mul(self, self._coerce(other))

    def __rmul__(self, other):
        return weyl_mul(self._coerce(other), self)

    def __pow__(self, k):
        out = WeylElem.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = WeylElem.const(other)
        return isinstance(other, WeylElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree in the Bernstein filtration (deg x = deg y = 1)."""
        return max((i + j for i, j in self.terms), default=-1)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.terms[(i, j)]
            mono = "*".join(s for s in (_pw("x", i), _pw("y", j)) if s)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}" if c.denominator == 1 else f"({c})*{mono}")
        return " + ".join(parts)


def _pw(v, e):
    return "" if e == 0 else v if e == 1 else f"{v}^{e}"


def weyl_mul(a, b):
    """Product in normal form, using y^j x^k = sum_t t! C(j,t) C(k,t) x^(k-t) y^(j-t)."""
    out = {}
    for (i1, j1), c1 in a.terms.items():
        for (i2, j2), c2 in b.terms.items():
            for t in range(min(j1, i2) + 1):
                coeff = c1 * c2 * factorial(t) * comb(j1, t) * comb(i2, t)
                key = (i1 + i2 - t, j1 + j2 - t)
                out[key] = out.get(key, 0) + coeff
    return WeylElem(out)


def commutator(a, b):
    return a * b - b * a


# -- polynomial representation: x acts as t*, y as d/dt ---------------------------------------


def _trim(p):
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_rep_apply(a, p):
    """a . p for p in Q[t] (coefficients lowest first), with x.p = t p and y.p = p'."""
    p = _trim(p)
    out = []
    for (i, j), c in a.terms.items():
        q = p
        for _ in range(j):
            q = [k * q[k] for k in range(1, len(q))]
        q = [Fraction(0)] * i + q
        if len(q) > len(out):
            out.extend([Fraction(0)] * (len(q) - len(out)))
        for k, v in enumerate(q):
            out[k] += c * v
    return _trim(out)


# -- the identities ---------------------------------------------------------------------------


def random_r(rng, max_degree):
    """r = sum_i a_i(x) y^i with small random rational coefficients."""
    terms = {}
    for i in range(rng.randint(0, max_degree) + 1):
        for k in range(rng.randint(0, max_degree) + 1):
            if rng.random() < 0.5:
                terms[(k, i)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return WeylElem(terms)


def _derivative_in_x(r):
    return WeylElem({(i - 1, j): i * c for (i, j), c in r.terms.items() if i > 0})


def iterated_commutator(r, n):
    """r^(n): apply a -> ya - ay n times."""
    y = WeylElem.y()
    for _ in range(n):
        r = commutator(y, r)
    return r


def not_in_left_ideal_of_yx(target=None, bound=8):
    """Prove target (default x) is not s*(yx) for any s, by an unsolvable linear system.

    In the Bernstein filtration gr A is a polynomial ring, so deg(s*yx) = deg s + 2 for
    s != 0.  A solution would need deg s = deg target - 2, so every s of degree
    <= ``bound`` covers all candidates once bound >= deg target - 2.
    Returns (unsolvable, details).
    """
    target = target if target is not None else WeylElem.x()
    need = max(target.degree() - 2, 0)
    bound = max(bound, need)
    yx = WeylElem.y() * WeylElem.x()
    unknowns = [(i, j) for i in range(bound + 1) for j in range(bound + 1 - i)]
    images = [WeylElem({m: 1}) * yx for m in unknowns]
    rows_keys = sorted({k for im in images for k in im.terms} | set(target.terms))
    M = [[im.terms.get(k, Fraction(0)) for im in images] for k in rows_keys]
    rhs = [target.terms.get(k, Fraction(0)) for k in rows_keys]
    sol = solve(QQ, M, rhs)
    return sol is None, {"bound": bound, "unknowns": len(unknowns), "equations": len(rows_keys)}


def certificate_check(max_degree=8, samples=200, seed=0):
    """Check identities (i)-(iv) exactly and refute x in A*(yx).

    (i)   y x^k - x^k y = k x^(k-1)
    (ii)  r^(1) = y r - r y has coefficients a_i'(x)
    (iii) y^(n+1) + r^(n+1) x = y (y^n + r^(n) x) - r^(n) (yx)
    (iv)  k y^(k-1) = y^(k-1) (yx) - x y^k
    (v)   x is not in A (yx)
    Raises IdentityFailed on the first failing instance; returns a report otherwise.
    """
    x, y = WeylElem.x(), WeylElem.y()
    yx = y * x
    report = {}
    count = 0
    for k in range(1, max_degree + 1):
        if y * x ** k - x ** k * y != k * x ** (k - 1):
            raise IdentityFailed(f"(i) fails at k={k}", "weyl", "certificate_check")
        count += 1
    report["i"] = count
    rng = random.Random(seed)
    rs = [random_r(rng, max_degree) for _ in range(samples)]
    for r in rs:
        if commutator(y, r) != _derivative_in_x(r):
            raise IdentityFailed(f"(ii) fails for r={r}", "weyl", "certificate_check")
    report["ii"] = len(rs)
    count = 0
    for r in rs:
        rn = r
        for n in range(max_degree + 1):
            rn1 = commutator(y, rn)
            lhs = y ** (n + 1) + rn1 * x
            rhs = y * (y ** n + rn * x) - rn * yx
            if lhs != rhs:
                raise IdentityFailed(f"(iii) fails at n={n}, r={r}", "weyl", "certificate_check")
            rn = rn1
            count += 1
    report["iii"] = count
    for k in range(1, max_degree + 1):
        if k * y ** (k - 1) != y ** (k - 1) * yx - x * y ** k:
            raise IdentityFailed(f"(iv) fails at k={k}", "weyl", "certificate_check")
    report["iv"] = max_degree
    ok, detail = not_in_left_ideal_of_yx(x, max_degree)
    if not ok:
        raise IdentityFailed("x appears to lie in A*(yx)", "weyl", "certificate_check")
    report["v"] = detail
    return report


def is_associative_sample(trials=1000, max_bidegree=5, seed=0):
    rng = random.Random(seed)

    def rand():
        return WeylElem({(rng.randint(0, max_bidegree), rng.randint(0, max_bidegree)):
                         rng.randint(-3, 3) for _ in range(3)})

    for _ in range(trials):
        a, b, c = rand(), rand(), rand()
        if (a * b) * c != a * (b * c):
            return False, (a, b, c)
    return True, None


def simplicity_witness(a, budget=64):
    """Reach a nonzero constant from a != 0 through commutators with x and y.

    Each [y, -] lowers the x-degree and each [-, x] lowers the y-degree, so the
    two-sided ideal generated by a contains 1.  Returns the constant, or None
    when the step budget runs out (inconclusive).
    """
    x, y = WeylElem.x(), WeylElem.y()
    c = a
    steps = 0
    while not c.is_zero() and steps < budget:
        if all(i == 0 and j == 0 for i, j in c.terms):
            return c.terms[(0, 0)]
        if any(i > 0 for i, _ in c.terms):
            c = commutator(y, c)
        else:
            c = commutator(c, x)
        steps += 1
    return None


def weyl_demo(max_degree=8, seed=0, samples=200):
    report = certificate_check(max_degree, samples, seed)
    assoc, _ = is_associative_sample(200, 5, seed)
    x, y = WeylElem.x(), WeylElem.y()
    rep = all(poly_rep_apply(a * b, p) == poly_rep_apply(a, poly_rep_apply(b, p))
              for a, b, p in [(y, x, [1]), (x * y, y * y, [0, 0, 1, 3]), (y * x, x * x, [2, 1])])
    return {
        "identities": report,
        "yx": repr(y * x),
        "y*x^2 - x^2*y": repr(y * x ** 2 - x ** 2 * y),
        "associative_sample": assoc,
        "representation_sample": rep,
        "x_not_in_A_yx": True,
        "pass": assoc and rep,
    }

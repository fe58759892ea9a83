"""Polynomials with coefficients in a finite-dimensional algebra; the variables are central."""

from fractions import Fraction

from ..errors import MixedParents
from ..polymod import ModVector, format_monomial, degrevlex_key, exp_add, var_names
from ..polymod.parse import parse_expression, parse_vector, variable_lookup


class AlgPoly:
    """sum_nu a_nu x^nu with a_nu in A; ``terms`` maps exponent tuples to coordinate tuples."""

    __slots__ = ("algebra", "nvars", "terms")

    def __init__(self, algebra, nvars, terms=None):
        self.algebra = algebra
        self.nvars = nvars
        A = algebra
        self.terms = {tuple(e): tuple(a) for e, a in (terms or {}).items() if not A.is_zero(a)}

    @classmethod
    def const(cls, A, n, a):
        return cls(A, n, {(0,) * n: a})

    @classmethod
    def scalar(cls, A, n, c):
        return cls.const(A, n, A.scalar(c))

    @classmethod
    def basis(cls, A, n, i):
        return cls.const(A, n, A.basis(i))

    @classmethod
    def var(cls, A, n, l):
        exp = tuple(1 if i == l else 0 for i in range(n))
        return cls(A, n, {exp: A.one()})

    @classmethod
    def monomial(cls, A, n, a, exp):
        return cls(A, n, {tuple(exp): a})

    def _coerce(self, other):
        if isinstance(other, AlgPoly):
            if other.algebra is not self.algebra or other.nvars != self.nvars:
                raise MixedParents("polynomials over different algebras", "leftideal", "AlgPoly")
            return other
        return AlgPoly.scalar(self.algebra, self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        A = self.algebra
        terms = dict(self.terms)
        for e, a in other.terms.items():
            terms[e] = A.add(terms[e], a) if e in terms else a
        return AlgPoly(A, self.nvars, terms)

    def __radd__(self, other):
        return self._coerce(other) + self

    def __neg__(self):
        A = self.algebra
        return AlgPoly(A, self.nvars, {e: A.scale(A.field.neg(A.field.one), a)
                                       for e, a in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        A = self.algebra
        terms = {}
        for e1, a1 in self.terms.items():
            for e2, a2 in other.terms.items():
                e = exp_add(e1, e2)
                ab = A.mul(a1, a2)
                terms[e] = A.add(terms[e], ab) if e in terms else ab
        return AlgPoly(A, self.nvars, terms)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, k):
        result = AlgPoly.const(self.algebra, self.nvars, self.algebra.one())
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, AlgPoly):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exp):
        return list(self.terms.get(tuple(exp), self.algebra.zero()))

    def to_vector(self):
        """Coordinates over the base field: an element of F[x]^d."""
        terms = {}
        for e, a in self.terms.items():
            for i, c in enumerate(a):
                if not self.algebra.field.is_zero(c):
                    terms[(i, e)] = c
        return ModVector(self.algebra.field, self.nvars, self.algebra.dim, terms)

    @classmethod
    def from_terms(cls, A, n, terms):
        """Inverse of to_vector on a (pos, exp) -> coefficient dictionary."""
        out = {}
        for (i, e), c in terms.items():
            a = out.setdefault(e, A.zero())
            a[i] = A.field.add(a[i], c)
        return cls(A, n, out)

    @classmethod
    def from_vector(cls, A, v):
        return cls.from_terms(A, v.nvars, v.terms)

    def to_string(self, names=None):
        names = names or var_names(self.nvars)
        if not self.terms:
            return "0"
        A = self.algebra
        parts = []
        for e in sorted(self.terms, key=degrevlex_key, reverse=True):
            a = list(self.terms[e])
            mono = format_monomial(e, names)
            # multiples of the unit print as plain scalars, which parse back unchanged
            c = unit_multiple(A, a)
            if c is not None and c == A.field.one:
                parts.append(mono or "1")
                continue
            coeff = A.field.format(c) if c is not None else A.format(a)
            if not mono:
                parts.append(coeff)
            else:
                if " " in coeff:
                    coeff = f"({coeff})"
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return self.to_string()


def unit_multiple(A, a):
    """c if a = c * 1, else None."""
    F = A.field
    i = next(i for i, u in enumerate(A.unit) if not F.is_zero(u))
    c = F.div(a[i], A.unit[i])
    return c if A.scalar(c) == list(a) else None


def left_mul_terms(A, a, terms):
    """a * v for v in F[x]^d given as a (pos, exp) dictionary."""
    F = A.field
    prods = {}
    out = {}
    for (pos, e), c in terms.items():
        if pos not in prods:
            prods[pos] = A.mul(a, A.basis(pos))
        for k, y in enumerate(prods[pos]):
            if F.is_zero(y):
                continue
            t = (k, e)
            val = F.mul(c, y)
            out[t] = F.add(out[t], val) if t in out else val
    return {t: c for t, c in out.items() if not F.is_zero(c)}


def _ring(A, n):
    vars_ = variable_lookup(n)
    names = {name: i for i, name in enumerate(A.names)}

    def lookup(name):
        if name in vars_:
            return AlgPoly.var(A, n, vars_[name])
        if name in names:
            return AlgPoly.basis(A, n, names[name])
        return None

    def const(q):
        return AlgPoly.scalar(A, n, Fraction(q))

    return lookup, const


def parse_algpoly(text, A, n):
    """Parse text such as ``(e11 + 2*e12)*x1^2 + e21``; basis names of A are the coefficients."""
    lookup, const = _ring(A, n)
    return parse_expression(text, lookup, const)


def parse_algpolys(text, A, n):
    """Parse ``[g1, g2, ...]`` or one generator per line."""
    text = text.strip()
    if text.startswith("["):
        lookup, const = _ring(A, n)
        return parse_vector(text, lookup, const)
    return [parse_algpoly(line, A, n) for line in text.splitlines()
            if line.strip() and not line.strip().startswith("#")]

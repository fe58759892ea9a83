"""Multivariate polynomials and vectors of them over an exact field.

Module elements are stored as dictionaries from *module terms* ``(pos, exp)``
to raw nonzero coefficients; ``exp`` is a tuple of exponents.
"""

from fractions import Fraction

from ..errors import InputError, MixedParents, RankMismatch


# -- monomial orders ---------------------------------------------------------------


def degrevlex_key(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def lex_key(exp):
    return exp


_MONO_KEYS = {"degrevlex": degrevlex_key, "lex": lex_key}


def term_key_function(order=("POT", "degrevlex")):
    """Sort key on module terms: larger key = larger term.

    POT compares positions first with position 0 the largest; TOP compares
    monomials first.
    """
    kind, mono = order
    mk = _MONO_KEYS[mono]
    if kind == "POT":
        return lambda t: (-t[0], mk(t[1]))
    if kind == "TOP":
        return lambda t: (mk(t[1]), -t[0])
    raise InputError(f"unknown module order {order!r}", "polymod", "order")


DEFAULT_ORDER = ("POT", "degrevlex")


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def exp_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def var_names(n):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i}" for i in range(1, n + 1)]


def format_monomial(exp, names):
    parts = []
    for e, name in zip(exp, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(F, terms, names, key=degrevlex_key):
    if not terms:
        return "0"
    out = []
    for exp in sorted(terms, key=key, reverse=True):
        c = terms[exp]
        mono = format_monomial(exp, names)
        cs = F.format(c)
        if " " in cs:
            cs = f"({cs})"
        if not mono:
            out.append(cs)
        elif c == F.one:
            out.append(mono)
        else:
            out.append(f"{cs}*{mono}")
    return " + ".join(out)


class MPoly:
    """Polynomial in n commuting variables; ``terms`` maps exponent tuples to raw coefficients."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        F = field
        self.terms = {tuple(e): c for e, c in (terms or {}).items() if not F.is_zero(c)}

    @classmethod
    def const(cls, field, nvars, c):
        return cls(field, nvars, {(0,) * nvars: field.convert(c)})

    @classmethod
    def var(cls, field, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls(field, nvars, {tuple(exp): field.one})

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.field != self.field or other.nvars != self.nvars:
                raise MixedParents("polynomials from different rings", "polymod", "MPoly")
            return other
        return MPoly.const(self.field, self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        F = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = F.add(terms[e], c) if e in terms else c
        return MPoly(F, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return MPoly(F, self.nvars, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, ModVector):
            return other.__rmul__(self)
        other = self._coerce(other)
        F = self.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_add(e1, e2)
                c = F.mul(c1, c2)
                terms[e] = F.add(terms[e], c) if e in terms else c
        return MPoly(F, self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = MPoly.const(self.field, self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (MixedParents, InputError, TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point, target=None, emb=None):
        """Value at a point whose coordinates are raw values of ``target`` (default: own field)."""
        K = target or self.field
        emb = emb or (lambda c: c)
        acc = K.zero
        for e, c in self.terms.items():
            v = emb(c)
            for x, k in zip(point, e):
                if k:
                    v = K.mul(v, K.pow(x, k))
            acc = K.add(acc, v)
        return acc

    def to_string(self, names=None):
        return format_terms(self.field, self.terms, names or var_names(self.nvars))

    def __repr__(self):
        return self.to_string()


class ModVector:
    """Element of F[x_1..x_n]^rank; ``terms`` maps (pos, exp) to raw coefficients."""

    __slots__ = ("field", "nvars", "rank", "terms")

    def __init__(self, field, nvars, rank, terms=None):
        self.field = field
        self.nvars = nvars
        self.rank = rank
        F = field
        self.terms = {t: c for t, c in (terms or {}).items() if not F.is_zero(c)}

    @classmethod
    def from_components(cls, comps, field=None, nvars=None):
        comps = list(comps)
        if not comps and (field is None or nvars is None):
            raise InputError("empty vector needs field and nvars", "polymod", "ModVector")
        field = field or comps[0].field
        nvars = nvars if nvars is not None else comps[0].nvars
        terms = {}
        for pos, p in enumerate(comps):
            if not isinstance(p, MPoly):
                p = MPoly.const(field, nvars, p)
            if p.field != field or p.nvars != nvars:
                raise MixedParents("components from different rings", "polymod", "ModVector")
            for e, c in p.terms.items():
                terms[(pos, e)] = c
        return cls(field, nvars, len(comps), terms)

    @classmethod
    def unit(cls, field, nvars, rank, pos):
        return cls(field, nvars, rank, {(pos, (0,) * nvars): field.one})

    def component(self, pos):
        return MPoly(self.field, self.nvars,
                     {e: c for (p, e), c in self.terms.items() if p == pos})

    def components(self):
        return [self.component(i) for i in range(self.rank)]

    def _check(self, other):
        if not isinstance(other, ModVector):
            raise TypeError("expected a ModVector")
        if other.rank != self.rank:
            raise RankMismatch(f"ranks {self.rank} and {other.rank} differ", "polymod", "ModVector")
        if other.field != self.field or other.nvars != self.nvars:
            raise MixedParents("vectors over different rings", "polymod", "ModVector")

    def __add__(self, other):
        self._check(other)
        return ModVector(self.field, self.nvars, self.rank, add_terms(self.field, self.terms, other.terms))

    def __neg__(self):
        F = self.field
        return ModVector(F, self.nvars, self.rank, {t: F.neg(c) for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, p):
        F = self.field
        if not isinstance(p, MPoly):
            p = MPoly.const(F, self.nvars, p)
        terms = {}
        for e1, c1 in p.terms.items():
            for (pos, e2), c2 in self.terms.items():
                t = (pos, exp_add(e1, e2))
                c = F.mul(c1, c2)
                terms[t] = F.add(terms[t], c) if t in terms else c
        return ModVector(F, self.nvars, self.rank, terms)

    def __eq__(self, other):
        return (isinstance(other, ModVector) and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(e) for _, e in self.terms), default=-1)

    def to_string(self, names=None):
        return "[" + ", ".join(p.to_string(names) for p in self.components()) + "]"

    def __repr__(self):
        return self.to_string()


def add_terms(F, a, b):
    out = dict(a)
    for t, c in b.items():
        if t in out:
            s = F.add(out[t], c)
            if F.is_zero(s):
                del out[t]
            else:
                out[t] = s
        else:
            out[t] = c
    return out


def scalar_from_text(F, text):
    return F.convert(Fraction(text))

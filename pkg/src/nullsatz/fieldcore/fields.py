"""Exact fields: the rationals, prime fields and simple extensions.

Elements are handled as *raw values* by the field objects (``int`` for
prime fields, ``Fraction`` for the rationals, tuples of base-field raw values
for extensions).  ``FieldElem`` wraps a raw value with its field for the
operator-friendly public API.
"""

import itertools
import threading
from fractions import Fraction
from functools import lru_cache

from ..errors import InputError, NotIrreducible, NotMonic, NotSupported
from . import upoly


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Shared behaviour.  Subclasses provide the arithmetic on raw values."""

    order = None
    characteristic = 0

    def __call__(self, x):
        return FieldElem(self, self.convert(x))

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return a == b

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def is_finite(self):
        return self.order is not None

    def elements(self):
        raise NotSupported(f"{self} is infinite", "fieldcore", "elements")

    def wrap(self, a):
        return FieldElem(self, a)

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc

    @property
    def prime_field(self):
        return self

    @property
    def absolute_degree(self):
        return 1


class PrimeField(Field):
    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise InputError(f"{p} is not a prime", "fieldcore", "PrimeField")
        self.p = p
        self.order = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def key(self):
        return ("Fp", self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def convert(self, x):
        if isinstance(x, FieldElem):
            if x.field == self:
                return x.value
            raise InputError(f"cannot convert element of {x.field} into {self}",
                             "fieldcore", "convert")
        if isinstance(x, str):
            x = Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def random(self, rng):
        return rng.randrange(self.p)

    def sort_key(self, a):
        return a

    def elements(self):
        return list(range(self.p))

    def to_json(self):
        return {"base": {"Fp": self.p}, "tower": []}

    def elem_to_json(self, a):
        return a

    def elem_from_json(self, j):
        return self.convert(j)

    def format(self, a):
        return str(a)


class RationalField(Field):
    zero = Fraction(0)
    one = Fraction(1)

    def key(self):
        return ("Q",)

    def __repr__(self):
        return "QQ"

    def convert(self, x):
        if isinstance(x, FieldElem):
            if x.field == self:
                return x.value
            raise InputError(f"cannot convert element of {x.field} into QQ",
                             "fieldcore", "convert")
        return Fraction(x)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def random(self, rng):
        return Fraction(rng.randint(-9, 9), rng.randint(1, 4))

    def sort_key(self, a):
        return a

    def to_json(self):
        return {"base": "Q", "tower": []}

    def elem_to_json(self, a):
        return f"{a.numerator}/{a.denominator}"

    def elem_from_json(self, j):
        return Fraction(j)

    def format(self, a):
        return str(a)


QQ = RationalField()

# fields of order up to this get log/antilog tables
_TABLE_LIMIT = 1 << 16


class ExtensionField(Field):
    """base[var]/(minpoly) with minpoly monic and irreducible over base."""

    def __init__(self, base, var, minpoly, check=True):
        mp = [base.convert(c) for c in minpoly]
        mp = upoly.trim(base, mp)
        if len(mp) < 2:
            raise InputError("defining polynomial must have degree >= 1",
                             "fieldcore", "make_extension")
        if mp[-1] != base.one:
            raise NotMonic(f"defining polynomial of {var} is not monic",
                           "fieldcore", "make_extension")
        if check:
            _check_irreducible(base, mp)
        self.base = base
        self.var = var
        self.minpoly = tuple(mp)
        self.n = len(mp) - 1
        self.characteristic = base.characteristic
        self.order = base.order ** self.n if base.order else None
        self.zero = tuple([base.zero] * self.n)
        self.one = tuple([base.one] + [base.zero] * (self.n - 1))
        # t^(n+i) expressed in the power basis, for reduction
        self._powers = self._reduction_table()
        self._tables = None
        self._lock = threading.Lock()

    def key(self):
        return ("ext", self.base.key(), self.minpoly)

    def __repr__(self):
        return f"{self.base!r}[{self.var}]/({upoly_str(self.base, self.minpoly, self.var)})"

    @property
    def prime_field(self):
        return self.base.prime_field

    @property
    def absolute_degree(self):
        return self.n * self.base.absolute_degree

    def _reduction_table(self):
        B, n = self.base, self.n
        cur = [B.neg(c) for c in self.minpoly[:n]]  # t^n
        table = [tuple(cur)]
        for _ in range(n - 2):
            top = cur[-1]
            cur = [B.zero] + cur[:-1]
            if not B.is_zero(top):
                cur = [B.add(c, B.mul(top, m)) for c, m in zip(cur, table[0])]
            table.append(tuple(cur))
        return table

    def gen(self):
        if self.n == 1:
            return FieldElem(self, (self.base.neg(self.minpoly[0]),))
        return FieldElem(self, tuple([self.base.zero, self.base.one] + [self.base.zero] * (self.n - 2)))

    def convert(self, x):
        B = self.base
        if isinstance(x, FieldElem):
            if x.field == self:
                return x.value
            return self.from_base(B.convert(x))
        if isinstance(x, (tuple, list)):
            if len(x) != self.n:
                raise InputError(f"expected {self.n} coordinates", "fieldcore", "convert")
            return tuple(B.convert(c) for c in x)
        return self.from_base(B.convert(x))

    def from_base(self, c):
        return (c,) + self.zero[1:]

    def from_int(self, k):
        return self.from_base(self.base.from_int(k))

    def add(self, a, b):
        B = self.base
        return tuple(B.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        B = self.base
        return tuple(B.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        B = self.base
        return tuple(B.neg(x) for x in a)

    def scale(self, c, a):
        B = self.base
        return tuple(B.mul(c, x) for x in a)

    def is_zero(self, a):
        return a == self.zero

    def _build_tables(self):
        with self._lock:
            if self._tables is not None:
                return self._tables
            q = self.order
            for g in self.elements():
                if g == self.zero:
                    continue
                exp, cur = [], self.one
                log = {}
                for i in range(q - 1):
                    if cur in log:
                        break
                    log[cur] = i
                    exp.append(cur)
                    cur = self._mul_poly(cur, g)
                if len(log) == q - 1:
                    self._tables = (log, exp)
                    return self._tables
            raise AssertionError("no primitive element found")

    def _mul_poly(self, a, b):
        B, n = self.base, self.n
        prod = [B.zero] * (2 * n - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                if not B.is_zero(y):
                    prod[i + j] = B.add(prod[i + j], B.mul(x, y))
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if not B.is_zero(c):
                row = self._powers[k - n]
                out = [B.add(o, B.mul(c, r)) for o, r in zip(out, row)]
        return tuple(out)

    def mul(self, a, b):
        if a == self.zero or b == self.zero:
            return self.zero
        if self.order is not None and self.order <= _TABLE_LIMIT:
            log, exp = self._tables or self._build_tables()
            return exp[(log[a] + log[b]) % (self.order - 1)]
        return self._mul_poly(a, b)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self.order is not None and self.order <= _TABLE_LIMIT:
            log, exp = self._tables or self._build_tables()
            return exp[-log[a] % (self.order - 1)]
        B = self.base
        d, s, _ = upoly.xgcd(B, upoly.trim(B, list(a)), list(self.minpoly))
        s = list(s) + [B.zero] * (self.n - len(s))
        return tuple(s[: self.n])

    def random(self, rng):
        return tuple(self.base.random(rng) for _ in range(self.n))

    def sort_key(self, a):
        return tuple(self.base.sort_key(c) for c in reversed(a))

    def elements(self):
        if self.order is None:
            return super().elements()
        return [tuple(reversed(c)) for c in itertools.product(self.base.elements(), repeat=self.n)]

    def to_json(self):
        j = self.base.to_json()
        j["tower"] = j["tower"] + [{"var": self.var,
                                    "minpoly": [self.base.elem_to_json(c) for c in self.minpoly]}]
        return j

    def elem_to_json(self, a):
        return [self.base.elem_to_json(c) for c in a]

    def elem_from_json(self, j):
        return tuple(self.base.elem_from_json(c) for c in j)

    def format(self, a):
        return upoly_str(self.base, upoly.trim(self.base, list(a)), self.var)


def upoly_str(F, f, var="x"):
    if not f:
        return "0"
    parts = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if F.is_zero(c):
            continue
        cs = F.format(c)
        if isinstance(F, ExtensionField) and " " in cs:
            cs = f"({cs})"
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            parts.append(cs)
        elif c == F.one:
            parts.append(mono)
        else:
            parts.append(f"{cs}*{mono}")
    return " + ".join(parts)


def _check_irreducible(base, f):
    n = len(f) - 1
    if n == 1:
        return
    if base.order is not None:
        if not upoly.is_irreducible_finite(base, f):
            raise NotIrreducible(f"{upoly_str(base, f, 't')} is reducible over {base}",
                                 "fieldcore", "make_extension")
        return
    if isinstance(base, RationalField):
        if n > 6:
            raise NotSupported("irreducibility over QQ is only decided up to degree 6",
                               "fieldcore", "make_extension")
        import sympy

        t = sympy.Symbol("t")
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f)], t,
                          domain="QQ")
        if not poly.is_irreducible:
            raise NotIrreducible(f"{upoly_str(base, f, 't')} is reducible over QQ",
                                 "fieldcore", "make_extension")
        return
    raise NotSupported("irreducibility over a number field extension is not decided",
                       "fieldcore", "make_extension")


def make_extension(base, varname, minpoly):
    return ExtensionField(base, varname, minpoly)


@lru_cache(maxsize=None)
def prime_field(p):
    return PrimeField(p)


def smallest_irreducible(F, n):
    """Lexicographically smallest monic irreducible of degree n over the finite field F."""
    elems = sorted(F.elements(), key=F.sort_key)
    for coeffs in itertools.product(elems, repeat=n):
        f = list(reversed(coeffs)) + [F.one]
        if n > 1 and F.is_zero(f[0]):
            continue
        if upoly.is_irreducible_finite(F, f):
            return f
    raise AssertionError("no irreducible polynomial found")


@lru_cache(maxsize=None)
def finite_field(p, n=1):
    """The field with p**n elements, as GF(p)[t]/(smallest irreducible)."""
    Fp = prime_field(p)
    if n == 1:
        return Fp
    return ExtensionField(Fp, "t", smallest_irreducible(Fp, n), check=False)


class Embedding:
    """A field morphism K -> L given by the image of K's generator."""

    def __init__(self, K, L, image=None):
        self.source = K
        self.target = L
        self.image = image
        if isinstance(K, ExtensionField):
            self._inner = embed(K.base, L)
            self._powers = [L.one]
            for _ in range(K.n - 1):
                self._powers.append(L.mul(self._powers[-1], image))

    def __call__(self, a):
        K, L = self.source, self.target
        if isinstance(K, PrimeField) or isinstance(K, RationalField):
            if isinstance(L, ExtensionField):
                return L.from_base(embed(K, L.base)(a)) if L.base != K else L.from_base(a)
            return L.convert(a) if K == L else L.from_int(a)
        acc = L.zero
        for c, pw in zip(a, self._powers):
            if not K.base.is_zero(c):
                acc = L.add(acc, L.mul(self._inner(c), pw))
        return acc

    def matrix(self):
        """Rows: images of the power basis of K, as coordinate vectors over L's prime field."""
        return [flatten(self.target, self(b)) for b in basis_over_prime(self.source)]


def flatten(F, a):
    """Coordinates of a over the prime field."""
    if isinstance(F, ExtensionField):
        out = []
        for c in a:
            out.extend(flatten(F.base, c))
        return out
    return [a]


def unflatten(F, coords):
    if isinstance(F, ExtensionField):
        m = F.base.absolute_degree
        return tuple(unflatten(F.base, coords[i * m:(i + 1) * m]) for i in range(F.n))
    return coords[0]


def basis_over_prime(F):
    d = F.absolute_degree
    out = []
    for i in range(d):
        v = [F.prime_field.zero] * d
        v[i] = F.prime_field.one
        out.append(unflatten(F, v))
    return out


_embed_cache = {}
_embed_lock = threading.Lock()


def embed(K, L):
    """Deterministic embedding K -> L (generator sent to its smallest root in L)."""
    key = (K.key(), L.key())
    with _embed_lock:
        if key in _embed_cache:
            return _embed_cache[key]
    if K == L:
        emb = IdentityEmbedding(K)
    elif isinstance(K, (PrimeField, RationalField)):
        if K != L.prime_field:
            raise InputError(f"no embedding {K} -> {L}", "fieldcore", "embed")
        emb = Embedding(K, L)
    else:
        if L.absolute_degree % K.absolute_degree or K.characteristic != L.characteristic:
            raise InputError(f"no embedding {K} -> {L}", "fieldcore", "embed")
        inner = embed(K.base, L)
        f = [inner(c) for c in K.minpoly]
        if L.order is None:
            raise NotSupported("embeddings between infinite fields are not computed",
                               "fieldcore", "embed")
        roots = upoly.roots_finite(L, f)
        if not roots:
            raise InputError(f"no embedding {K} -> {L}", "fieldcore", "embed")
        emb = Embedding(K, L, roots[0])
    with _embed_lock:
        _embed_cache[key] = emb
    return emb


class IdentityEmbedding(Embedding):
    def __init__(self, K):
        self.source = self.target = K
        self.image = None

    def __call__(self, a):
        return a


class FieldElem:
    """An element together with its field, with arithmetic operators."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise InputError("elements of different fields", "fieldcore", "arith")
            return other.value
        return self.field.convert(other)

    def __add__(self, other):
        return FieldElem(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElem(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other):
        return FieldElem(self.field, self.field.div(self._coerce(other), self.value))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def __eq__(self, other):
        try:
            return self.value == self._coerce(other)
        except (InputError, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.value))

    def coordinates(self):
        v = self.value
        return list(v) if isinstance(v, tuple) else [v]

    def __repr__(self):
        return self.field.format(self.value)


def field_from_json(j):
    base = j["base"]
    if base == "Q":
        F = QQ
    elif isinstance(base, dict) and "Fp" in base:
        F = prime_field(int(base["Fp"]))
    else:
        raise InputError(f"unknown base field {base!r}", "fieldcore", "from_json")
    for level in j.get("tower", []):
        F = ExtensionField(F, level["var"], [F.elem_from_json(c) for c in level["minpoly"]])
    return F


def field_to_json(F):
    return F.to_json()

"""Finite-dimensional associative unital algebras given by structure constants."""

import re
import threading

from ..errors import DimensionMismatch, InputError, NotSupported
from ..fieldcore import QQ, field_from_json, prime_field
from ..fieldcore import upoly
from ..fieldcore.linalg import kernel_basis_raw, row_basis


class FinDimAlgebra:
    """Algebra with basis b_0..b_{d-1} and b_i b_j = sum_k c[i][j][k] b_k.

    Elements are coordinate lists of raw field values.
    """

    def __init__(self, field, structure, unit, names=None, check=True, label=None):
        self.field = F = field
        self.dim = d = len(structure)
        self.structure = [[[F.convert(c) for c in row] for row in plane] for plane in structure]
        if any(len(plane) != d or any(len(row) != d for row in plane) for plane in self.structure):
            raise DimensionMismatch("structure constants must be d x d x d", "findim", "FinDimAlgebra")
        self.unit = [F.convert(c) for c in unit]
        if len(self.unit) != d:
            raise DimensionMismatch("unit has wrong length", "findim", "FinDimAlgebra")
        self.names = list(names) if names else [f"b{i + 1}" for i in range(d)]
        self.label = label
        self._sparse = [[[(k, c) for k, c in enumerate(self.structure[i][j]) if not F.is_zero(c)]
                         for j in range(d)] for i in range(d)]
        self._cache = {}
        self._lock = threading.RLock()
        if check:
            self._check_unit()
            self._check_associative()

    def __repr__(self):
        return f"FinDimAlgebra({self.label or self.dim}, over {self.field!r})"

    # -- construction checks --------------------------------------------------

    def _check_unit(self):
        for i in range(self.dim):
            b = self.basis(i)
            if self.mul(self.unit, b) != b or self.mul(b, self.unit) != b:
                raise InputError(f"unit fails on basis element {self.names[i]}",
                                 "findim", "FinDimAlgebra")

    def _check_associative(self):
        d = self.dim
        prods = [[self.mul(self.basis(i), self.basis(j)) for j in range(d)] for i in range(d)]
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = self.mul(prods[i][j], self.basis(k))
                    right = self.mul(self.basis(i), prods[j][k])
                    if left != right:
                        raise InputError(
                            f"not associative on ({self.names[i]}, {self.names[j]}, {self.names[k]})",
                            "findim", "FinDimAlgebra")

    # -- elements ---------------------------------------------------------------

    def zero(self):
        return [self.field.zero] * self.dim

    def one(self):
        return list(self.unit)

    def basis(self, i):
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def scalar(self, c):
        F = self.field
        c = F.convert(c)
        return [F.mul(c, u) for u in self.unit]

    def add(self, a, b):
        F = self.field
        return [F.add(x, y) for x, y in zip(a, b)]

    def sub(self, a, b):
        F = self.field
        return [F.sub(x, y) for x, y in zip(a, b)]

    def scale(self, c, a):
        F = self.field
        return [F.mul(c, x) for x in a]

    def is_zero(self, a):
        return all(self.field.is_zero(x) for x in a)

    def mul(self, a, b):
        F = self.field
        acc = [F.zero] * self.dim
        bnz = [(j, y) for j, y in enumerate(b) if not F.is_zero(y)]
        for i, x in enumerate(a):
            if F.is_zero(x):
                continue
            row = self._sparse[i]
            for j, y in bnz:
                xy = F.mul(x, y)
                for k, c in row[j]:
                    acc[k] = F.add(acc[k], F.mul(xy, c))
        return acc

    def pow(self, a, e):
        result = self.one()
        for _ in range(e):
            result = self.mul(result, a)
        return result

    def commutator(self, a, b):
        return self.sub(self.mul(a, b), self.mul(b, a))

    def left_matrix(self, a):
        """Matrix of x -> a x acting on coordinate columns."""
        return [list(col) for col in zip(*[self.mul(a, self.basis(j)) for j in range(self.dim)])]

    def right_matrix(self, a):
        """Matrix of x -> x a acting on coordinate columns."""
        return [list(col) for col in zip(*[self.mul(self.basis(j), a) for j in range(self.dim)])]

    @property
    def left_mats(self):
        return self.cached("left_mats", lambda: [self.left_matrix(self.basis(i))
                                                 for i in range(self.dim)])

    @property
    def right_mats(self):
        return self.cached("right_mats", lambda: [self.right_matrix(self.basis(i))
                                                  for i in range(self.dim)])

    def cached(self, key, compute):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = compute()
            return self._cache[key]

    def elements(self):
        import itertools

        elems = self.field.elements()
        for coords in itertools.product(elems, repeat=self.dim):
            yield list(coords)

    def size(self):
        if self.field.order is None:
            return None
        return self.field.order ** self.dim

    def is_commutative(self):
        d = self.dim
        return all(self.structure[i][j] == self.structure[j][i] for i in range(d) for j in range(d))

    def center(self):
        """Basis of the center."""
        def compute():
            rows = []
            for i in range(self.dim):
                M = [[self.field.sub(x, y) for x, y in zip(r1, r2)]
                     for r1, r2 in zip(self.right_mats[i], self.left_mats[i])]
                rows.extend(M)
            return row_basis(self.field, kernel_basis_raw(self.field, rows, self.dim))
        return self.cached("center", compute)

    def is_central(self):
        return len(self.center()) == 1

    def format(self, a):
        F = self.field
        parts = []
        for c, name in zip(a, self.names):
            if F.is_zero(c):
                continue
            parts.append(name if c == F.one else f"{F.format(c)}*{name}")
        return " + ".join(parts) or "0"

    def to_json(self):
        F = self.field
        j = {
            "field": F.to_json(),
            "dim": self.dim,
            "unit": [F.elem_to_json(c) for c in self.unit],
            "structure": [[[F.elem_to_json(c) for c in row] for row in plane]
                          for plane in self.structure],
            "names": self.names,
        }
        if self.label:
            j["preset"] = self.label
        return j


def algebra_from_json(j):
    try:
        if "preset" in j and "structure" not in j:
            return preset(j["preset"])
        F = field_from_json(j["field"])
        structure = [[[F.elem_from_json(c) for c in row] for row in plane] for plane in j["structure"]]
        unit = [F.elem_from_json(c) for c in j["unit"]]
        if "dim" in j and j["dim"] != len(structure):
            raise DimensionMismatch("dim disagrees with structure constants", "findim", "from_json")
        return FinDimAlgebra(F, structure, unit, j.get("names"), label=j.get("preset"))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed algebra description: {exc}", "findim", "from_json") from exc


# -- presets ---------------------------------------------------------------------


def _base_field(q):
    if q in ("Q", "QQ"):
        return QQ
    q = int(q)
    F = None
    try:
        F = prime_field(q)
    except InputError:
        pass
    if F is None:
        raise NotSupported(f"algebra base field must be prime or Q, got {q}", "findim", "preset")
    return F


def _from_table(F, names, table, unit_name, label):
    idx = {n: i for i, n in enumerate(names)}
    d = len(names)
    structure = [[[F.zero] * d for _ in range(d)] for _ in range(d)]
    for (a, b), terms in table.items():
        for name, c in terms:
            k = idx[name]
            structure[idx[a]][idx[b]][k] = F.add(structure[idx[a]][idx[b]][k], F.convert(c))
    unit = [F.zero] * d
    if isinstance(unit_name, dict):
        for name, c in unit_name.items():
            unit[idx[name]] = F.convert(c)
    else:
        unit[idx[unit_name]] = F.one
    return FinDimAlgebra(F, structure, unit, names, label=label)


def matrix_algebra(n, F, label=None):
    names = [f"e{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    table = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for l in range(1, n + 1):
                    if j == k:
                        table[(f"e{i}{j}", f"e{k}{l}")] = [(f"e{i}{l}", 1)]
    unit = {f"e{i}{i}": 1 for i in range(1, n + 1)}
    return _from_table(F, names, table, unit, label or f"M{n}({F.p if F.order else 'Q'})")


def upper_triangular(n, F, label=None):
    names = [f"e{i}{j}" for i in range(1, n + 1) for j in range(i, n + 1)]
    table = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for l in range(j, n + 1):
                table[(f"e{i}{j}", f"e{j}{l}")] = [(f"e{i}{l}", 1)]
    unit = {f"e{i}{i}": 1 for i in range(1, n + 1)}
    return _from_table(F, names, table, unit, label)


def cyclic_group_algebra(n, F, label=None):
    names = ["e"] + (["g"] if n == 2 else [f"g{i}" for i in range(1, n)])
    table = {}
    for i in range(n):
        for j in range(n):
            table[(names[i], names[j])] = [(names[(i + j) % n], 1)]
    return _from_table(F, names, table, "e", label)


def monogenic(F, f, var="u", label=None):
    """F[u]/(f) with basis 1, u, u^2, ..."""
    f = upoly.monic(F, upoly.trim(F, [F.convert(c) for c in f]))
    n = len(f) - 1
    if n < 1:
        raise InputError("modulus must have degree >= 1", "findim", "preset")
    names = ["one", var] + [f"{var}{i}" for i in range(2, n)]
    d = n
    structure = [[[F.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for j in range(d):
            mono = [F.zero] * (i + j) + [F.one]
            r = upoly.mod(F, mono, f)
            for k, c in enumerate(r):
                structure[i][j][k] = c
    unit = [F.one] + [F.zero] * (d - 1)
    return FinDimAlgebra(F, structure, unit, names[:d], label=label)


def dual_numbers(F, label=None):
    A = monogenic(F, [0, 0, 1], label=label)
    A.names = ["one", "eps"]
    return A


def _parse_univariate(text, var):
    """Integer-coefficient univariate polynomial like 'u^2-2' -> coefficient list."""
    s = text.replace(" ", "")
    if not s:
        raise InputError("empty polynomial", "findim", "preset")
    coeffs = {}
    pos = 0
    while pos < len(s):
        m = re.match(r"([+-]?)(\d*)(\*?)(" + re.escape(var) + r"(?:\^(\d+))?)?", s[pos:])
        if not m or m.end() == 0 or (not m.group(2) and not m.group(4)):
            raise InputError(f"cannot parse polynomial {text!r} at offset {pos}", "findim", "preset")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        e = (int(m.group(5)) if m.group(5) else 1) if m.group(4) else 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos += m.end()
    n = max(coeffs)
    return [coeffs.get(i, 0) for i in range(n + 1)]


def preset(name):
    """Named instance algebras.

    Supported: ``Mn(q)``, ``Mn(Q)``, ``dual_numbers(q)``, ``F_q[eps]``,
    ``F_q[u]/(f)``, ``F_q``, ``group:Cn(q)``, ``upper_triangular:n(q)``
    with q prime.
    """
    s = name.strip()
    m = re.fullmatch(r"M(\d+)\((\w+)\)", s)
    if m:
        return matrix_algebra(int(m.group(1)), _base_field(m.group(2)), label=s)
    m = re.fullmatch(r"dual_numbers\((\w+)\)", s) or re.fullmatch(r"F_(\w+)\[eps\]", s)
    if m:
        return dual_numbers(_base_field(m.group(1)), label=s)
    m = re.fullmatch(r"F_(\w+)\[(\w)\]/\(?(.+?)\)?", s)
    if m:
        F = _base_field(m.group(1))
        return monogenic(F, _parse_univariate(m.group(3), m.group(2)), m.group(2), label=s)
    m = re.fullmatch(r"F_(\w+)", s)
    if m:
        F = _base_field(m.group(1))
        return FinDimAlgebra(F, [[[F.one]]], [F.one], ["one"], label=s)
    m = re.fullmatch(r"group:C(\d+)\((\w+)\)", s)
    if m:
        return cyclic_group_algebra(int(m.group(1)), _base_field(m.group(2)), label=s)
    m = re.fullmatch(r"upper_triangular:(\d+)\((\w+)\)", s)
    if m:
        return upper_triangular(int(m.group(1)), _base_field(m.group(2)), label=s)
    raise InputError(f"unknown algebra preset {name!r}", "findim", "preset")

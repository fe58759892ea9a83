"""Recursive-descent parser for polynomial text such as ``3*x1^2*x2 + t*x1 - 1``.

The parser is generic over the ring: the caller supplies ``lookup(name)``
returning a ring element (or None for an unknown name) and ``const(q)``
turning a Fraction into a ring element.  Ring elements must support
``+ - *`` and ``**`` by a nonnegative int.  Division is only allowed by
numeric constants.
"""

import re
from fractions import Fraction

from ..errors import ParseError
from .poly import ModVector, MPoly, var_names

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", num, start))
        elif name is not None:
            out.append(("name", name, start))
        else:
            out.append(("sym", sym, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, lookup, const):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0
        self.lookup = lookup
        self.const = const

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, sym):
        kind, val, off = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r}, found {val or 'end of input'!r}", off)

    def lift(self, v):
        return self.const(v) if isinstance(v, Fraction) else v

    def expr(self):
        v = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                w = self.term()
                if isinstance(v, Fraction) and isinstance(w, Fraction):
                    v = v + w if val == "+" else v - w
                else:
                    v = self.lift(v) + self.lift(w) if val == "+" else self.lift(v) - self.lift(w)
            else:
                return v

    def term(self):
        v = self.unary()
        while True:
            kind, val, off = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                w = self.unary()
                if isinstance(v, Fraction) and isinstance(w, Fraction):
                    v = v * w
                else:
                    v = self.lift(v) * self.lift(w)
            elif kind == "sym" and val == "/":
                self.take()
                w = self.unary()
                if not isinstance(w, Fraction):
                    raise ParseError("division only by numeric constants", off)
                if w == 0:
                    raise ParseError("division by zero", off)
                v = v / w if isinstance(v, Fraction) else v * self.const(1 / w)
            else:
                return v

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            v = self.unary()
            if val == "+":
                return v
            return -v if isinstance(v, Fraction) else self.const(Fraction(0)) - v
        return self.power()

    def power(self):
        v = self.atom()
        kind, val, off = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            k2, v2, o2 = self.take()
            if k2 != "num" or not v2.isdigit():
                raise ParseError("exponent must be a nonnegative integer", o2)
            e = int(v2)
            return v ** e if isinstance(v, Fraction) else v ** e
        return v

    def atom(self):
        kind, val, off = self.take()
        if kind == "num":
            return Fraction(val)
        if kind == "name":
            v = self.lookup(val)
            if v is None:
                raise ParseError(f"unknown name {val!r}", off)
            return v
        if kind == "sym" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected {val or 'end of input'!r}", off)

    def finish(self):
        kind, val, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", off)


def parse_expression(text, lookup, const):
    """Parse a single ring expression."""
    p = _Parser(text, lookup, const)
    v = p.expr()
    p.finish()
    return p.lift(v)


def parse_vector(text, lookup, const):
    """Parse ``[p1, p2, ...]`` (or a bare expression, giving a one-element list)."""
    p = _Parser(text, lookup, const)
    kind, val, _ = p.peek()
    if not (kind == "sym" and val == "["):
        v = p.expr()
        p.finish()
        return [p.lift(v)]
    p.take()
    out = [p.lift(p.expr())]
    while True:
        kind, val, off = p.take()
        if kind == "sym" and val == ",":
            out.append(p.lift(p.expr()))
        elif kind == "sym" and val == "]":
            break
        else:
            raise ParseError(f"expected ',' or ']', found {val or 'end of input'!r}", off)
    p.finish()
    return out


def variable_lookup(nvars):
    """Names x1..xn, plus x, y, z as aliases for the first three."""
    table = {f"x{i + 1}": i for i in range(nvars)}
    for i, name in enumerate(var_names(min(nvars, 3))):
        table.setdefault(name, i)
    return table


def _field_lookup(F):
    """Generator names of a tower of extensions, as elements of the top field."""
    out = {}
    lifts = []
    K = F
    while getattr(K, "var", None) is not None:
        g = K.gen().value
        for up in reversed(lifts):
            g = up(g)
        out.setdefault(K.var, g)
        lifts.append(K.from_base)
        K = K.base
    return out


def parse_poly(text, field, nvars):
    """Parse a polynomial over ``field`` in variables x1..xn (aliases x, y, z)."""
    vars_ = variable_lookup(nvars)
    consts = _field_lookup(field)

    def lookup(name):
        if name in vars_:
            return MPoly.var(field, nvars, vars_[name])
        if name in consts:
            return MPoly(field, nvars, {(0,) * nvars: consts[name]})
        return None

    def const(q):
        return MPoly.const(field, nvars, q)

    return parse_expression(text, lookup, const)


def parse_modvector(text, field, nvars, rank=None):
    vars_ = variable_lookup(nvars)
    consts = _field_lookup(field)

    def lookup(name):
        if name in vars_:
            return MPoly.var(field, nvars, vars_[name])
        if name in consts:
            return MPoly(field, nvars, {(0,) * nvars: consts[name]})
        return None

    def const(q):
        return MPoly.const(field, nvars, q)

    comps = parse_vector(text, lookup, const)
    if rank is not None and len(comps) != rank:
        raise ParseError(f"vector has {len(comps)} entries, expected {rank}", 0)
    return ModVector.from_components(comps, field, nvars)

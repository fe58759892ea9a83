import itertools

import pytest
from hypothesis import given, strategies as st

from nullsatz.errors import DegreeBoundTooSmall, DegreeBudgetExceeded, ParseError, RankMismatch
from nullsatz.fieldcore import QQ, embed, finite_field, prime_field
from nullsatz.polymod import (ModVector, MPoly, QuotientSpace, Submodule, colon_vector,
                              enumerate_points, intersect_submodules, is_zero_dimensional,
                              module_groebner, normal_form, parse_modvector, parse_poly,
                              quotient_dimension)
from nullsatz.polymod.groebner import _Reducer, _spoly

F2, F3, F5 = prime_field(2), prime_field(3), prime_field(5)


def P(text, F=F5, n=1):
    return parse_poly(text, F, n)


def V(text, F=F5, n=1, rank=None):
    return parse_modvector(text, F, n, rank)


def ideal(F, n, *texts):
    return Submodule(F, n, 1, [ModVector.from_components([P(t, F, n)]) for t in texts])


# -- examples --------------------------------------------------------------------------------


def test_gb_examples():
    S = ideal(F5, 1, "x^2 - 1", "x - 1")
    assert S.basis == [V("x - 1")]
    U = Submodule(F5, 1, 2, [V("[1, 0]"), V("[0, 1]")])
    assert U.is_full() and U.basis == [V("[1, 0]"), V("[0, 1]")]
    S = ideal(QQ, 2, "x", "y")
    assert sorted(map(repr, S.basis)) == sorted(map(repr, [V("x", QQ, 2), V("y", QQ, 2)]))
    assert S.contains(V("x*y", QQ, 2))


def test_normal_form_examples():
    S = ideal(F5, 1, "x - 1")
    assert normal_form(V("x - 1"), S).is_zero()
    assert normal_form(V("x^2"), S) == V("1")
    T = Submodule(F5, 1, 2, [V("[x, 0]"), V("[0, x - 1]")])
    assert normal_form(V("[x, 1]"), T) == V("[0, 1]")


def test_zero_dimensional_examples():
    assert is_zero_dimensional(ideal(F3, 1, "x^2 - x")) == (True, 1)
    assert is_zero_dimensional(ideal(F3, 2, "x"))[0] is False
    assert is_zero_dimensional(ideal(F5, 1, "x^2 - 2")) == (True, 2)


def test_enumerate_examples():
    pts = enumerate_points(ideal(F3, 1, "x^2 - x"))
    assert sorted(xi for _, xi in pts) == [(0,), (1,)]
    pts = enumerate_points(ideal(F5, 1, "x^2 - 2"))
    assert len(pts) == 2
    L = pts[0][0]
    assert L.order == 25
    a, b = (xi[0] for _, xi in pts)
    assert L.add(a, b) == L.zero and L.mul(a, a) == L.from_int(2)
    pts = enumerate_points(ideal(F2, 1, "x^2 + 1"))
    assert [xi for _, xi in pts] == [(1,)]


def test_enumerate_degree_bound_too_small():
    with pytest.raises(DegreeBoundTooSmall):
        enumerate_points(ideal(F5, 1, "x^2 - 2"), 1)


def test_intersection_examples():
    S = ideal(F5, 1, "x^2 + 3", "x^3")
    assert intersect_submodules(S, S) == S
    assert intersect_submodules(ideal(F5, 1, "x"), ideal(F5, 1, "x - 1")) == ideal(F5, 1, "x^2 - x")
    Z = intersect_submodules(Submodule(F5, 1, 2, [V("[1, 0]")]), Submodule(F5, 1, 2, [V("[0, 1]")]))
    assert Z.is_zero()


def test_colon():
    S = ideal(F5, 2, "x*y", "y^2")
    C = colon_vector(S, V("y", F5, 2))
    assert C == ideal(F5, 2, "x", "y")


def test_degree_budget():
    S = Submodule(F5, 2, 1, [ModVector.from_components([P("x^3*y - y^4 + 1", F5, 2)]),
                             ModVector.from_components([P("x^4 - x*y^2", F5, 2)])], degree_cap=4)
    with pytest.raises(DegreeBudgetExceeded):
        S.basis


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        Submodule(F5, 1, 2, [V("x")])


def test_quotient_space():
    S = ideal(F3, 2, "x^2", "y^2", "x*y")
    Q = QuotientSpace(S)
    assert Q.dim == 3 and quotient_dimension(S) == 3
    Mx = Q.mult_matrix(0)
    # x kills x and y-multiples; x*1 = x
    assert sum(1 for row in Mx for c in row if c) == 1


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        P("x^^2")
    assert exc.value.offset == 2
    with pytest.raises(ParseError):
        P("x + w")
    with pytest.raises(ParseError):
        P("(x + 1")


def test_parse_tower_constant():
    K = finite_field(5, 2)
    p = parse_poly("t*x + 1", K, 1)
    assert p.terms[(1,)] == K.gen().value


# -- properties ------------------------------------------------------------------------------

coeff = st.integers(0, 4)
term2 = st.tuples(st.integers(0, 1), st.integers(0, 3), st.integers(0, 3), st.integers(1, 4))
vector2 = st.lists(term2, min_size=1, max_size=4)


def mv(terms, F=F5, n=2, rank=2):
    d = {}
    for pos, a, b, c in terms:
        d[(pos, (a, b))] = F.add(d.get((pos, (a, b)), F.zero), c)
    return ModVector(F, n, rank, d)


@given(st.lists(vector2, min_size=1, max_size=3))
def test_buchberger_postcondition(gens):
    S = Submodule(F5, 2, 2, [mv(g) for g in gens])
    G = S.gb_terms()
    red = _Reducer(F5, S.key)
    for lead, g in G:
        red.add(lead, g)
    for (li, gi), (lj, gj) in itertools.combinations(G, 2):
        if li[0] == lj[0]:
            assert not red.reduce(_spoly(F5, li, gi, lj, gj))
    for g in gens:
        assert S.contains(mv(g))


@given(st.lists(vector2, min_size=1, max_size=3), vector2, vector2)
def test_normal_form_linear(gens, u, v):
    S = Submodule(F5, 2, 2, [mv(g) for g in gens])
    U, W = mv(u), mv(v)
    assert S.normal_form(U + W) == S.normal_form(S.normal_form(U) + W)


@given(st.lists(vector2, min_size=1, max_size=2), st.lists(vector2, min_size=1, max_size=2),
       vector2)
def test_intersection_properties(g1, g2, h):
    S1 = Submodule(F5, 2, 1, [mv([(0,) + t[1:] for t in g], rank=1) for g in g1])
    S2 = Submodule(F5, 2, 1, [mv([(0,) + t[1:] for t in g], rank=1) for g in g2])
    S = intersect_submodules(S1, S2)
    for b in S.basis:
        assert S1.contains(b) and S2.contains(b)
    # a product of members of both sides lies in both
    a = S1.gens[0]
    b = S2.gens[0]
    pa = MPoly(F5, 2, {e: c for (_, e), c in a.terms.items()})
    prod = MPoly(F5, 2, {e: c for (_, e), c in mv([(0,) + t[1:] for t in h], rank=1).terms.items()})
    assert S.contains((prod * pa) * b)


def _scan_points(S, D):
    """All zeros of the annihilator over F_{q^e}, e | D, by brute force."""
    F = S.field
    found = set()
    for e in range(1, D + 1):
        if D % e:
            continue
        L = finite_field(F.characteristic, e)
        emb = embed(F, L)
        for xi in itertools.product(list(L.elements()), repeat=S.nvars):
            if all(g.component(0).evaluate(xi, L, emb) == L.zero for g in S.basis):
                found.add((L.order, xi))
    return found


@pytest.mark.parametrize("texts,n", [(("x^3 - x",), 1), (("x^2 + 1",), 1), (("x^4 - 1",), 1),
                                     (("x^2 - y", "y^2 - 1"), 2), (("x*y - 1", "x^2 - 2"), 2),
                                     (("x^3 - 2",), 1)])
def test_enumerate_matches_exhaustive_scan(texts, n):
    S = ideal(F3 if "2" not in "".join(texts) else F5, n, *texts)
    ok, D = is_zero_dimensional(S)
    assert ok
    pts = enumerate_points(S)
    for L, xi in pts:
        emb = embed(S.field, L)
        for g in S.basis:
            assert g.component(0).evaluate(xi, L, emb) == L.zero
    # every zero found by scanning appears with its exact degree
    scanned = _scan_points(S, D)
    exact = {(L.order, xi) for L, xi in pts}
    minimal = set()
    for order, xi in scanned:
        L = finite_field(S.field.characteristic, len(str(order)) and _log(order, S.field.order))
        degs = [_deg(L, S.field.order, x) for x in xi]
        from math import lcm
        e = lcm(*degs)
        if S.field.order ** e == order:
            minimal.add((order, xi))
    assert minimal == exact


def _log(n, b):
    k = 0
    while n > 1:
        n //= b
        k += 1
    return k


def _deg(L, q, x):
    e = 1
    y = L.pow(x, q)
    while y != x:
        y = L.pow(y, q)
        e += 1
    return e


def test_module_groebner_orders():
    S = Submodule(F5, 2, 2, [V("[x, y]", F5, 2), V("[y, x]", F5, 2)])
    T = module_groebner(S, ("TOP", "lex"))
    for g in S.basis:
        assert T.contains(g)
    for g in T.basis:
        assert S.contains(g)

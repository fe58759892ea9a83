import itertools

import pytest

from nullsatz.errors import FactorIndexOutOfRange, NotSurjective, ZeroVector
from nullsatz.fieldcore import prime_field
from nullsatz.findim import preset, wedderburn
from nullsatz.leftideal import (AlgebraMorphism, AlgPoly, DirectionalPoint, FiniteQuotient,
                                LeftIdeal, directional_ideal, evaluate, is_maximal_left,
                                is_prime_left_witnessed, is_semiprime_left_witnessed, kills,
                                parse_algpoly, transport)

from _util import ideal, random_algpoly, rng

F3 = prime_field(3)


def el(A, n, text):
    return parse_algpoly(text, A, n)


# -- generation and membership ----------------------------------------------------------------


def test_generate_examples():
    A = preset("M2(3)")
    assert ideal(A, 1, "1").is_full()
    assert LeftIdeal.generate(A, 1, []).is_zero()
    I = ideal(A, 1, "e11")
    assert I.contains(el(A, 1, "e21"))
    assert not I.contains(el(A, 1, "e12"))


def test_contains_examples():
    A = preset("F_5")
    I = ideal(A, 1, "x")
    assert I.contains(el(A, 1, "x")) and not I.contains(el(A, 1, "1"))
    D = preset("dual_numbers(5)")
    J = ideal(D, 1, "x", "eps*x")
    assert not J.contains(el(D, 1, "eps"))
    assert all(J.contains(g) for g in J.basis())


@pytest.mark.parametrize("name,gens", [("M2(2)", ["e11*x + e12", "x^2"]),
                                       ("upper_triangular:2(5)", ["e12*x - e22", "e11*x^2"]),
                                       ("group:C2(5)", ["g*x - 1"])])
def test_backing_module_closed_under_left_multiplication(name, gens):
    A = preset(name)
    I = ideal(A, 1, *gens)
    assert I.check_closure()
    r = rng(3)
    for _ in range(20):
        a, g = random_algpoly(A, 1, r, 2, 2), I.basis()[0]
        assert I.contains(a * g)


# -- evaluation and directional ideals ---------------------------------------------------------


def test_directional_f3():
    A = preset("F_3")
    W = wedderburn(A)
    J = directional_ideal(W, DirectionalPoint(0, F3, (2,), (1,)), A, 1)
    assert J == ideal(A, 1, "x - 2")


def test_directional_m2_f2():
    A = preset("M2(2)")
    W = wedderburn(A)
    F2 = A.field
    v = _e1_direction(W)
    J = directional_ideal(W, DirectionalPoint(0, F2, (0,), v), A, 1)
    expected = ideal(A, 1, "x", "e12", "e22")
    assert J == expected
    assert not J.contains(el(A, 1, "1"))
    # oracle: a(0) e1 = 0 is the first column of a(0) vanishing
    for a in A.elements():
        member = J.contains(AlgPoly.const(A, 1, a))
        assert member == (a[0] == 0 and a[2] == 0)


def _e1_direction(W):
    """The vector of the factor field corresponding to e1 under theta (theta may permute)."""
    A = W.algebra
    E = W.factors[0].field
    # theta(e11) is a rank one idempotent; its image spans the line of e1
    T = W.theta(0, A.basis(0))
    col = next(c for c in range(2) if any(not E.is_zero(T[r][c]) for r in range(2)))
    return tuple(T[r][col] for r in range(2))


def test_evaluate_examples():
    A = preset("M2(3)")
    W = wedderburn(A)
    a = el(A, 1, "e11*x + e12")
    assert evaluate(W, a, 0, (1,)) == evaluate(W, el(A, 1, "e11 + e12"), 0, (0,))
    E = W.factors[0].field
    assert evaluate(W, el(A, 1, "1"), 0, (2,)) == [[E.one, E.zero], [E.zero, E.one]]
    D = preset("dual_numbers(5)")
    WD = wedderburn(D)
    for xi in range(5):
        assert evaluate(WD, el(D, 1, "eps*x"), 0, (xi,)) == [[0]]


def test_directional_errors():
    A = preset("M2(3)")
    W = wedderburn(A)
    with pytest.raises(ZeroVector):
        directional_ideal(W, DirectionalPoint(0, F3, (0,), (0, 0)), A, 1)
    with pytest.raises(FactorIndexOutOfRange):
        directional_ideal(W, DirectionalPoint(3, F3, (0,), (1, 0)), A, 1)


@pytest.mark.parametrize("name,xi,v,n", [("M2(3)", (2,), (1, 1), 1), ("group:C2(5)", (3,), (1,), 1),
                                         ("upper_triangular:2(5)", (1, 4), (1,), 2),
                                         ("dual_numbers(5)", (0, 2), (1,), 2)])
def test_directional_consistency(name, xi, v, n):
    A = preset(name)
    W = wedderburn(A)
    E = W.factors[0].field
    P = DirectionalPoint(0, E, xi, tuple(E.convert(c) for c in v))
    J = directional_ideal(W, P, A, n)
    assert not J.contains(el(A, n, "1"))
    r = rng(11)
    trials = 1000 if n == 1 else 300
    hits = 0
    for _ in range(trials):
        a = random_algpoly(A, n, r, 2, 3)
        member = J.contains(a)
        assert member == kills(W, P, a)
        hits += member
    # also elements of J built on purpose
    for g in J.basis():
        assert kills(W, P, g)


def test_directional_over_extension_field():
    A = preset("F_5[u]/(u^2-2)")
    W = wedderburn(A)
    E = W.factors[0].field
    x0 = E.gen().value
    J = directional_ideal(W, DirectionalPoint(0, E, (x0,), (E.one,)), A, 1)
    v = FiniteQuotient(J)
    assert v.dim == 2
    assert is_maximal_left(J)
    assert is_semiprime_left_witnessed(J)


@pytest.mark.parametrize("name", ["M2(2)", "dual_numbers(3)", "upper_triangular:2(3)"])
def test_directional_ideals_semiprime_and_maximal(name):
    A = preset(name)
    W = wedderburn(A)
    for j, fac in enumerate(W.factors):
        E = fac.field
        for xi in E.elements():
            for v in itertools.product(list(E.elements()), repeat=fac.k):
                if all(E.is_zero(c) for c in v):
                    continue
                J = directional_ideal(W, DirectionalPoint(j, E, (xi,), v), A, 1)
                assert is_semiprime_left_witnessed(J)
                assert is_maximal_left(J)
                assert not J.contains(el(A, 1, "1"))


# -- predicates --------------------------------------------------------------------------------


def test_semiprime_examples():
    D = preset("dual_numbers(5)")
    assert is_semiprime_left_witnessed(ideal(D, 1, "1"))
    I = ideal(D, 1, "eps*x")
    v = is_semiprime_left_witnessed(I, candidates=[el(D, 1, "eps*x"), el(D, 1, "eps")])
    assert not v and v.witness == el(D, 1, "eps")
    F = preset("F_3")
    assert is_semiprime_left_witnessed(ideal(F, 1, "x - 2"))
    assert is_maximal_left(ideal(F, 1, "x - 2"))


def _brute_semiprime(I, max_deg):
    """Definitional check over representatives of degree <= max_deg (finite search)."""
    A, n = I.algebra, I.nvars
    F = A.field
    monos = [e for e in itertools.product(range(max_deg + 1), repeat=n) if sum(e) <= max_deg]
    spanning = [AlgPoly.monomial(A, n, A.basis(i), e) for i in range(A.dim) for e in monos]
    slots = [(e, i) for e in monos for i in range(A.dim)]
    for coeffs in itertools.product(list(F.elements()), repeat=len(slots)):
        terms = {}
        for (e, i), c in zip(slots, coeffs):
            if not F.is_zero(c):
                vec = terms.setdefault(e, [F.zero] * A.dim)
                vec[i] = c
        a = AlgPoly(A, n, {e: tuple(v) for e, v in terms.items()})
        if I.contains(a):
            continue
        if all(I.contains(a * m * a) for m in spanning):
            return False, a
    return True, None


@pytest.mark.parametrize("name,gens,expect", [
    ("F_3", ["x^2"], False), ("F_3", ["x^2 - x"], True), ("F_3", ["x^2 + 1"], True),
    ("dual_numbers(3)", ["x", "eps"], True), ("dual_numbers(3)", ["x"], False),
    ("F_2", ["x^3"], False), ("M2(2)", ["x"], True), ("M2(2)", ["x^2"], False),
])
def test_exact_semiprime_against_brute_force(name, gens, expect):
    I = ideal(name, 1, *gens)
    v = is_semiprime_left_witnessed(I)
    assert bool(v) == expect and v.exact
    if not v:
        a = v.witness
        assert not I.contains(a)
        A = I.algebra
        for i in range(A.dim):
            for k in range(4):
                m = AlgPoly.monomial(A, 1, A.basis(i), (k,))
                assert I.contains(a * m * a)
    if A_small(name):
        ok, _ = _brute_semiprime(I, 1)
        if expect:
            assert ok


def A_small(name):
    return name in ("F_3", "F_2", "dual_numbers(3)")


def test_prime_examples():
    F = preset("F_3")
    assert is_prime_left_witnessed(ideal(F, 1, "x - 1"))
    assert not is_prime_left_witnessed(ideal(F, 1, "x^2 - x"))
    A = preset("M2(2)")
    assert is_prime_left_witnessed(ideal(A, 1, "x"))
    v = is_prime_left_witnessed(ideal(A, 1, "x^2 + x"))
    assert not v
    a, b = v.witness
    I = ideal(A, 1, "x^2 + x")
    assert not I.contains(a) and not I.contains(b)


# -- transport ---------------------------------------------------------------------------------


def _pi():
    D = preset("dual_numbers(5)")
    F = preset("F_5")
    return D, F, AlgebraMorphism(D, F, [[1, 0]])


def test_transport_examples():
    D, F, pi = _pi()
    ident = AlgebraMorphism(D, D, [[1, 0], [0, 1]])
    I = ideal(D, 1, "x^2", "eps*x")
    assert transport(ident, I) == I
    assert transport(pi, ideal(D, 1, "eps", "x")) == ideal(F, 1, "x")
    assert transport(pi, ideal(F, 1, "x"), "preimage") == ideal(D, 1, "eps", "x")
    assert transport(pi, ideal(F, 1, "1"), "preimage").is_full()


def test_transport_not_surjective():
    F = preset("F_5")
    D = preset("dual_numbers(5)")
    with pytest.raises(NotSurjective):
        transport(AlgebraMorphism(F, D, [[1], [0]]), ideal(F, 1, "x"))


@pytest.mark.parametrize("gens", [["x^2"], ["x^2 - 1"], ["x - 3"], ["x^3 - x"], ["x^2 + 2"]])
def test_transport_preserves_verdicts(gens):
    D, F, pi = _pi()
    I = ideal(D, 1, "eps", *gens)
    J = transport(pi, I)
    assert transport(pi, J, "preimage") == I
    for pred in (is_semiprime_left_witnessed, is_prime_left_witnessed, is_maximal_left):
        assert bool(pred(I)) == bool(pred(J))

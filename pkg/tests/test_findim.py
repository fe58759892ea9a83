import itertools

import pytest

from nullsatz.errors import NotSimpleModule, ZeroVector, NotAzumaya
from nullsatz.fieldcore import QQ, prime_field
from nullsatz.findim import (FinDimAlgebra, LeftIdealFD, algebra_from_json, ann_maximal_check,
                             center_intersection, cyclic_group_algebra, double_annihilator_check,
                             dual_numbers, ideal_quotient, is_maximal_left, is_prime_left,
                             is_prime_submodule, is_semiprime_left, is_semiprime_submodule,
                             is_semisimple, left_ideals, matrix_algebra, maximal_left_ideals,
                             maximal_two_sided_ideals, perp, preset, radical, two_sided_ideals,
                             upper_triangular, wedderburn, xi_preimage)
from nullsatz.findim.structure import two_sided_closure

F2, F3, F5, F7 = (prime_field(p) for p in (2, 3, 5, 7))


def vec(A, **coeffs):
    v = A.zero()
    for name, c in coeffs.items():
        v[A.names.index(name)] = A.field.convert(c)
    return v


def brute_radical(A):
    """Largest nilpotent two-sided ideal spanned by a subset of basis vectors (UT2 oracle)."""
    best = []
    for r in range(A.dim + 1):
        for S in itertools.combinations(range(A.dim), r):
            vs = [A.basis(i) for i in S]
            if len(two_sided_closure(A, vs)) != len(vs):
                continue
            if all(A.is_zero(A.pow(v, A.dim + 1)) for v in vs) and \
               all(A.is_zero(A.mul(a, b)) or r == 0 for a in vs for b in vs):
                best = vs if len(vs) > len(best) else best
    return best


# -- radical ---------------------------------------------------------------------------------


def test_radical_dual_numbers():
    A = dual_numbers(F7)
    assert radical(A) == [vec(A, eps=1)]


def test_radical_matrix_algebra_empty():
    assert radical(matrix_algebra(2, F5)) == []


def test_radical_upper_triangular_over_q():
    A = upper_triangular(2, QQ)
    assert radical(A) == [vec(A, e12=1)]
    assert radical(A) == brute_radical(A)


@pytest.mark.parametrize("name", ["M2(2)", "M2(3)", "F_2[eps]", "group:C2(2)", "group:C3(3)",
                                  "upper_triangular:2(2)", "upper_triangular:3(3)"])
def test_radical_quotient_semisimple_small_char(name):
    A = preset(name)
    W = wedderburn(A)
    assert radical(W.quotient.quotient) == []
    for r in radical(A):
        assert A.is_zero(A.pow(r, A.dim))


def test_radical_group_algebra_char_divides_order():
    A = preset("group:C2(2)")
    assert radical(A) == [vec(A, e=1, g=1)]


# -- wedderburn ------------------------------------------------------------------------------


def _check_idempotents(A, W):
    es = [f.idempotent for f in W.factors]
    total = A.zero()
    for e in es:
        total = A.add(total, e)
        assert A.mul(e, e) == e
    assert total == A.one()
    for a, b in itertools.combinations(es, 2):
        assert A.is_zero(A.mul(a, b))


def _check_morphism(A, W):
    for j, fac in enumerate(W.factors):
        E, k = fac.field, fac.k
        for a in range(A.dim):
            for b in range(A.dim):
                lhs = W.theta(j, A.mul(A.basis(a), A.basis(b)))
                X, Y = W.theta(j, A.basis(a)), W.theta(j, A.basis(b))
                rhs = [[E.sum(E.mul(X[r][t], Y[t][s]) for t in range(k)) for s in range(k)]
                       for r in range(k)]
                assert lhs == rhs


def test_wedderburn_group_algebra():
    A = cyclic_group_algebra(2, F5)
    W = wedderburn(A)
    assert sorted(f.k for f in W.factors) == [1, 1]
    half = F5.inv(2)
    expected = sorted([[half, half], [half, F5.neg(half)]])
    assert sorted(f.idempotent for f in W.factors) == expected
    _check_idempotents(A, W)
    _check_morphism(A, W)


def test_wedderburn_f25_as_algebra():
    A = preset("F_5[u]/(u^2-2)")
    W = wedderburn(A)
    assert len(W.factors) == 1
    f = W.factors[0]
    assert f.k == 1 and f.m == 2 and f.field.order == 25


def test_wedderburn_m2_f3():
    A = matrix_algebra(2, F3)
    W = wedderburn(A)
    assert [(f.k, f.m) for f in W.factors] == [(2, 1)]
    _check_morphism(A, W)
    # theta is a bijection onto M_2(F_3)
    images = {tuple(map(tuple, W.theta(0, a))) for a in A.elements()}
    assert len(images) == 81


@pytest.mark.parametrize("name", ["dual_numbers(5)", "upper_triangular:2(5)", "M2(2)",
                                  "group:C3(7)", "F_3[u]/(u^3-u-1)", "group:C2(5)"])
def test_wedderburn_invariants(name):
    A = preset(name)
    W = wedderburn(A)
    _check_idempotents(A, W)
    _check_morphism(A, W)
    for j, fac in enumerate(W.factors):
        for r in range(fac.k):
            for s in range(fac.k):
                M = [[fac.field.one if (a, b) == (r, s) else fac.field.zero
                      for b in range(fac.k)] for a in range(fac.k)]
                assert W.theta(j, W.lift(j, M)) == M


# -- Xi map ----------------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["F_5", "M2(2)", "M2(5)", "M3(3)", "group:C2(5)"])
def test_xi_identity(name):
    D = xi_preimage(preset(name))
    ok, info = D.check()
    assert ok, info


def test_xi_m2_coordinate_preimage():
    F = F3
    A = matrix_algebra(2, F)
    units = {(i, j): vec(A, **{f"e{i}{j}": 1}) for i in (1, 2) for j in (1, 2)}
    for (i, j) in units:
        for x in itertools.islice(A.elements(), 0, 81, 7):
            acc = A.zero()
            for l in (1, 2):
                acc = A.add(acc, A.mul(A.mul(units[(l, i)], x), units[(j, l)]))
            assert acc == A.scalar(x[A.names.index(f"e{i}{j}")])


def test_xi_not_azumaya():
    with pytest.raises(NotAzumaya):
        xi_preimage(preset("upper_triangular:2(5)"))


# -- ideal quotient, perp, double annihilator -------------------------------------------------


def _kills_e1(A):
    return LeftIdealFD(A, [vec(A, e12=1), vec(A, e22=1)])


def test_ideal_quotient_examples():
    A = matrix_algebra(2, F2)
    assert ideal_quotient(LeftIdealFD(A, [A.basis(i) for i in range(4)])).dim == 4
    I = _kills_e1(A)
    assert ideal_quotient(I).dim == 0
    # exhaustive oracle: no nonzero a with aA inside I
    for a in A.elements():
        if all(I.contains(A.mul(a, b)) for b in A.elements()):
            assert A.is_zero(a)
    D = dual_numbers(F7)
    J = LeftIdealFD(D, [vec(D, eps=1)])
    assert ideal_quotient(J) == J


def test_perp_examples():
    A = matrix_algebra(2, F2)
    P = LeftIdealFD(A, perp(_kills_e1(A)), check=False)
    expected = [b for b in A.elements() if A.is_zero(b[2:])]
    assert sorted(map(tuple, (b for b in A.elements() if P.contains(b)))) == \
        sorted(map(tuple, expected))
    zero = LeftIdealFD(A, [])
    assert len(perp(zero)) == 4
    full = LeftIdealFD(A, [A.basis(i) for i in range(4)])
    assert len(perp(full)) == 4


def test_double_annihilator_examples():
    A = matrix_algebra(2, F2)
    assert double_annihilator_check(_kills_e1(A))[0]
    F4 = preset("F_2[u]/(u^2+u+1)")
    assert double_annihilator_check(LeftIdealFD(F4, []))[0]
    D = dual_numbers(F7)
    (m,) = maximal_left_ideals(D)
    assert m == LeftIdealFD(D, [vec(D, eps=1)])
    assert double_annihilator_check(m)[0]


@pytest.mark.parametrize("name", ["M2(2)", "M2(3)", "group:C2(5)", "F_2[u]/(u^2+u+1)",
                                  "upper_triangular:2(3)", "dual_numbers(3)"])
def test_maximal_left_ideal_properties(name):
    A = preset(name)
    Z = A.center()
    maximal_two = {I.key() for I in maximal_two_sided_ideals(A)}
    for m in maximal_left_ideals(A):
        assert is_maximal_left(m)
        Q = ideal_quotient(m)
        assert Q <= m
        assert Q.key() in maximal_two
        assert center_intersection(Q) == center_intersection(m)
        if A.is_central() or not radical(A):
            assert double_annihilator_check(m)[0]
    assert Z


def test_ideal_quotient_two_sided_for_all_left_ideals():
    A = matrix_algebra(2, F2)
    for I in left_ideals(A):
        Q = ideal_quotient(I)
        assert Q <= I
        for v in Q.basis:
            for i in range(4):
                assert Q.contains(A.mul(v, A.basis(i)))
                assert Q.contains(A.mul(A.basis(i), v))
    assert len(two_sided_ideals(A)) == 2


# -- predicates ------------------------------------------------------------------------------


def test_prime_and_semiprime_examples():
    A = matrix_algebra(2, F2)
    assert is_prime_left(_kills_e1(A))
    assert is_prime_left(LeftIdealFD(A, []))
    D = dual_numbers(F2)
    v = is_semiprime_left(LeftIdealFD(D, []))
    assert not v and v.exact
    assert v.witness == vec(D, eps=1)


def test_sampling_mode_reports_trials():
    A = matrix_algebra(2, F3)
    v = is_semiprime_left(LeftIdealFD(A, []), exact=False, trials=50, seed=1)
    assert v and not v.exact and v.trials == 50


def test_ann_maximal_examples():
    A = matrix_algebra(2, F3)
    # column action: b_i acts by its own 2x2 matrix
    action = []
    for i in range(4):
        r, c = divmod(i, 2)
        action.append([[1 if (a, b) == (r, c) else 0 for b in range(2)] for a in range(2)])
    ok, ann = ann_maximal_check(A, action, [1, 0])
    assert ok and ann.dim == 2
    F4 = preset("F_2[u]/(u^2+u+1)")
    ok, ann = ann_maximal_check(F4, [F4.left_matrix(F4.basis(i)) for i in range(2)], [1, 0])
    assert ok and ann.dim == 0
    G = cyclic_group_algebra(2, F5)
    ok, ann = ann_maximal_check(G, [[[1]], [[4]]], [1])
    assert ok and ann.basis == [[1, 1]]
    with pytest.raises(ZeroVector):
        ann_maximal_check(G, [[[1]], [[4]]], [0])
    with pytest.raises(NotSimpleModule):
        ann_maximal_check(G, [[[1, 0], [0, 1]], [[4, 0], [0, 1]]], [1, 0])


def test_submodule_predicates():
    D = dual_numbers(F2)
    full = [[1, 0], [0, 1]]
    assert is_semiprime_submodule(D, 1, full) and is_prime_submodule(D, 1, full).exact
    # eps*M: anything outside has a unit constant term, so omega_0(x) x stays outside
    assert is_semiprime_submodule(D, 1, [[0, 1]])
    v = is_semiprime_submodule(D, 1, [])
    assert not v and v.witness == [0, 1]
    F = preset("F_3")
    assert is_prime_submodule(F, 1, [])


def test_algebra_json_round_trip():
    A = preset("group:C2(5)")
    B = algebra_from_json(A.to_json())
    assert B.structure == A.structure and B.unit == A.unit


def test_associativity_checked():
    from nullsatz.errors import InputError

    F = F3
    # b0 = 1, b1 with b1*b1 = b0 + b1 made non-associative by breaking b1*b0
    structure = [[[1, 0], [0, 1]], [[0, 2], [1, 1]]]
    with pytest.raises(InputError):
        FinDimAlgebra(F, structure, [1, 0])


def test_semisimple_flags():
    assert is_semisimple(matrix_algebra(2, F3))
    assert not is_semisimple(dual_numbers(F5))

from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from nullsatz.errors import DimensionMismatch, NotIrreducible, NotMonic
from nullsatz.fieldcore import (QQ, ExactMatrix, embed, field_from_json, field_to_json,
                                finite_field, flatten, intersect_rowspaces, kernel_basis,
                                make_extension, prime_field, rref_matrix, unflatten)
from nullsatz.fieldcore import upoly
from nullsatz.fieldcore.linalg import matvec, rref

F2, F3, F5 = prime_field(2), prime_field(3), prime_field(5)
F4 = make_extension(F2, "t", [1, 1, 1])
F25 = make_extension(F5, "u", [-2, 0, 1])
SQ2 = make_extension(QQ, "s", [-2, 0, 1])


def test_f4_relation():
    t = F4.gen()
    assert t * t == t + 1
    assert F4.order == 4


def test_sqrt2_relation():
    s = SQ2.gen()
    assert s * s == SQ2(2)
    assert SQ2.order is None


def test_f25_is_field_since_two_is_nonresidue():
    assert all(pow(a, 2, 5) != 2 for a in range(5))
    assert F25.order == 25
    assert len(list(F25.elements())) == 25


def test_reducible_rejected():
    with pytest.raises(NotIrreducible):
        make_extension(F5, "u", [-1, 0, 1])
    with pytest.raises(NotIrreducible):
        make_extension(QQ, "s", [-4, 0, 1])


def test_not_monic_rejected():
    with pytest.raises(NotMonic):
        make_extension(F5, "u", [2, 0, 2])


@pytest.mark.parametrize("F", [F2, F3, F4, finite_field(2, 3), finite_field(3, 2)])
def test_field_axioms_exhaustive(F):
    els = list(F.elements())
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        if not F.is_zero(b):
            assert F.mul(F.div(a, b), b) == a
    for a, b, c in itertools.product(els[:6], repeat=3):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


small = st.integers(-20, 20)


@given(st.lists(small, min_size=6, max_size=6))
def test_field_axioms_sampled_sqrt2(xs):
    a, b, c = SQ2((xs[0], xs[1])), SQ2((xs[2], xs[3])), SQ2((xs[4], xs[5]))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == SQ2(1)


def test_rref_examples():
    R, piv, rank = rref_matrix(ExactMatrix(F3, [[1, 0], [0, 1]]))
    assert R.rows == [[1, 0], [0, 1]] and piv == [0, 1] and rank == 2
    R, piv, rank = rref_matrix(ExactMatrix(QQ, [[1, 2], [2, 4]]))
    assert R.rows == [[1, 2]] and rank == 1
    t = F4.gen().value
    _, _, rank = rref_matrix(ExactMatrix(F4, [[t, F4.one], [F4.one, t]]))
    assert rank == 2


def test_kernel_examples():
    assert len(kernel_basis(ExactMatrix(F3, [[0, 0], [0, 0]]))) == 2
    assert kernel_basis(ExactMatrix(F3, [[1, 0], [0, 1]])) == []
    (v,) = kernel_basis(ExactMatrix(F5, [[1, 1]]))
    assert F5.add(v[0], v[1]) == 0 and v != [0, 0]


def test_intersect_examples():
    S = ExactMatrix(F3, [[1, 2, 0], [0, 0, 1]])
    assert intersect_rowspaces([S, S]).rows == rref_matrix(S)[0].rows
    assert intersect_rowspaces([ExactMatrix(F2, [[1, 0]]), ExactMatrix(F2, [[0, 1]])]).rows == []
    out = intersect_rowspaces([ExactMatrix(QQ, [[1, 0], [0, 1]]), ExactMatrix(QQ, [[1, 1]])])
    assert out.rows == [[1, 1]]
    with pytest.raises(DimensionMismatch):
        intersect_rowspaces([ExactMatrix(QQ, [[1, 0]]), ExactMatrix(QQ, [[1, 0, 0]])])


mat5 = st.lists(st.lists(st.integers(0, 4), min_size=4, max_size=4), min_size=1, max_size=5)


@given(mat5)
def test_rref_idempotent(rows):
    R, _ = rref(F5, rows)
    if R:
        assert rref(F5, R)[0] == R


@given(mat5)
def test_kernel_vectors_are_killed(rows):
    for v in kernel_basis(ExactMatrix(F5, rows)):
        assert all(c == 0 for c in matvec(F5, rows, v))


@given(mat5, mat5)
def test_intersection_inside_inputs(r1, r2):
    I = intersect_rowspaces([ExactMatrix(F5, r1), ExactMatrix(F5, r2)])
    for rows in (r1, r2):
        base = rref(F5, rows)[0]
        for v in I.rows:
            assert len(rref(F5, base + [v])[0]) == len(base)


def test_rational_exactness():
    R, _, _ = rref_matrix(ExactMatrix(QQ, [[3, 1], [1, Fraction(1, 3)]]))
    assert R.rows == [[1, Fraction(1, 3)]]


def test_json_round_trip():
    for F in (F5, QQ, F25, SQ2):
        assert field_from_json(field_to_json(F)) == F


def test_flatten_and_embed():
    L = finite_field(5, 4)
    e = embed(F25, L)
    u = F25.gen().value
    image = e(u)
    assert L.mul(image, image) == L.from_int(2)
    assert unflatten(F25, flatten(F25, u)) == u


def test_roots_and_minpoly():
    assert sorted(upoly.roots_finite(F3, [0, -1 % 3, 1])) == [0, 1]
    assert upoly.roots_finite(F5, [3, 0, 1]) == []

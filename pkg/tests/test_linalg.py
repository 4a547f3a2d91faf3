from fractions import Fraction

from hypothesis import given, strategies as st

import cyclevote._linalg as la

small_matrix = st.lists(
    st.lists(st.integers(-4, 4), min_size=4, max_size=4),
    min_size=2,
    max_size=5,
)


def test_rank_and_nullspace_basics():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert la.rank(m) == 2
    ns = la.nullspace(m)
    assert len(ns) == 1
    assert la.mat_vec(m, ns[0]) == la.zeros(3)


def test_rref_identity():
    m = [[2, 0], [0, 3]]
    rows, pivots = la.rref(m)
    assert rows == [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    assert pivots == [0, 1]


def test_solve_in_span_prefers_earlier_columns():
    # the third column is the negated sum of the first two: it gets weight 0
    cols = [(1, 0), (0, 1), (-1, -1)]
    coeffs = la.solve_in_span(cols, (3, 4))
    assert coeffs == [Fraction(3), Fraction(4), Fraction(0)]


def test_solve_in_span_outside():
    assert la.solve_in_span([(1, 0, 0)], (0, 1, 0)) is None


def test_fractional_rows():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(2)]]
    assert la.rank(m) == 2
    assert la.nullspace(m) == []
    singular = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1)]]
    assert la.rank(singular) == 1
    (kernel_vector,) = la.nullspace(singular)
    assert la.mat_vec(singular, kernel_vector) == la.zeros(2)


@given(small_matrix)
def test_nullspace_annihilated_and_dimension(rows):
    ns = la.nullspace(rows)
    assert la.rank(rows) + len(ns) == 4
    for v in ns:
        assert la.mat_vec(rows, v) == la.zeros(len(rows))


@given(small_matrix)
def test_rref_rank_agrees_with_bareiss(rows):
    reduced, pivots = la.rref(rows)
    assert len(pivots) == la.rank(rows)
    # reducing again changes nothing
    assert la.rref(reduced)[0] == reduced


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3))
def test_solve_recovers_combination(coeffs):
    cols = [(1, 0, 2), (0, 1, 1), (1, 1, 0)]
    target = la.zeros(3)
    for c, col in zip(coeffs, cols):
        target = la.add(target, la.scale(c, col))
    got = la.solve_in_span(cols, target)
    assert got is not None
    rebuilt = la.zeros(3)
    for c, col in zip(got, cols):
        rebuilt = la.add(rebuilt, la.scale(c, col))
    assert rebuilt == target


def test_mat_mul_and_transpose():
    a = ((1, 2), (3, 4))
    assert la.mat_mul(a, la.identity_matrix(2)) == la.mat(a)
    assert la.transpose(la.transpose(a)) == la.mat(a)
    assert la.dot((1, 2, 3), (4, 5, 6)) == 32

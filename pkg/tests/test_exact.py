"""Exact arithmetic substrate."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defocone.exact import (
    affine_rank,
    in_span,
    nullspace,
    parallel,
    parse_rat,
    rank,
    rat_str,
    rref,
    vec_dot,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
)


def test_parse_grammar():
    assert parse_rat("3") == 3
    assert parse_rat("-7/2") == Fraction(-7, 2)
    for bad in ("0.5", "1/0", "1/-2", "+3", "", "a", "1e3"):
        with pytest.raises(ValueError):
            parse_rat(bad)


def test_format_is_canonical():
    assert rat_str(Fraction(4, 2)) == "2"
    assert rat_str(Fraction(-3, 6)) == "-1/2"


@given(rationals)
def test_parse_roundtrip(x):
    assert parse_rat(rat_str(x)) == x


@given(rationals, rationals)
def test_arithmetic_never_rounds(a, b):
    if a != 0 and b != 0:
        assert (a / b) * (b / a) == 1


def test_nullspace_examples():
    # symmetric kernel of a single difference row
    assert nullspace([[1, -1]], 2) == [(Fraction(1), Fraction(1))]
    # trivial kernel of the identity
    assert nullspace([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3) == []
    # empty matrix: standard basis of the full space
    ns = nullspace([], 2)
    assert ns == [(1, 0), (0, 1)]


def test_nullspace_triangle_cycle_matrix():
    # cycle equations of a triangle framework: two independent equations in
    # three unknowns, kernel spanned by the all-ones vector
    a, b, c = (Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))
    rows = [
        [b[0] - a[0], c[0] - b[0], a[0] - c[0]],
        [b[1] - a[1], c[1] - b[1], a[1] - c[1]],
    ]
    ns = nullspace(rows, 3)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] == v[1] == v[2] != 0


def test_rank_examples():
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1 if i == j else 0 for j in range(4)] for i in range(4)]) == 4
    assert rank([[1, 2, 3], [2, 4, 6], [0, 1, 0]]) == 2


small_matrices = st.lists(
    st.lists(rationals, min_size=1, max_size=5),
    min_size=1,
    max_size=5,
).filter(lambda rows: len({len(r) for r in rows}) == 1)


@given(small_matrices)
@settings(max_examples=60, deadline=None)
def test_rank_nullity_and_kernel_membership(rows):
    n = len(rows[0])
    ns = nullspace(rows, n)
    assert rank(rows, n) + len(ns) == n
    for v in ns:
        for row in rows:
            assert vec_dot(tuple(row), v) == 0
    # basis vectors are independent: each has a 1 where the others are 0
    assert rank(ns, n) == len(ns)


def test_rref_deterministic_pivots():
    rows = [[0, 2, 4], [1, 1, 1]]
    reduced, pivots = rref(rows)
    assert pivots == [0, 1]
    assert reduced[0][0] == 1 and reduced[1][1] == 1


def test_span_and_parallel():
    assert in_span([(1, 0), (0, 1)], (5, -3))
    assert not in_span([(1, 1)], (1, 2))
    assert parallel((2, 4), (1, 2))
    assert parallel((0, 0), (1, 2))
    assert not parallel((1, 0), (1, 1))


def test_affine_rank():
    assert affine_rank([]) == -1
    assert affine_rank([(Fraction(1), Fraction(1))]) == 0
    pts = [(0, 0), (1, 0), (2, 0)]
    assert affine_rank([tuple(map(Fraction, p)) for p in pts]) == 1

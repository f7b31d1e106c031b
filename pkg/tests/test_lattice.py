from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oneone.lattice import (INF, CyclicInterval, FullCircleMinus, ProjectiveSlope, det, farey_gap,
                            interval_contains, lattice_points_in_triangle, mediant, parse_rational,
                            triangle_empty, winding_number, winding_sum)

S = ProjectiveSlope.of
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_slope_normalization():
    assert S("-4/-6") == ProjectiveSlope(2, 3)
    assert S("inf") == INF == ProjectiveSlope(-5, 0)
    assert str(S(3)) == "3/1"
    with pytest.raises(ValueError):
        ProjectiveSlope(0, 0)
    assert parse_rational("7/2") == F(7, 2)


@pytest.mark.parametrize("I, s, want", [
    (CyclicInterval(S(0), INF), S("5/2"), True),
    (CyclicInterval(INF, S(0)), S("-7/2"), True),
    (CyclicInterval(S("5/2"), S(3)), S("8/3"), True),
    (CyclicInterval(S("5/2"), S(3)), INF, False),
    (CyclicInterval(S(3), S("5/2")), INF, True),
])
def test_interval_contains(I, s, want):
    assert interval_contains(I, s) is want


def test_full_circle_minus():
    I = FullCircleMinus(S(0))
    assert interval_contains(I, INF) and not interval_contains(I, S(0))


@pytest.mark.parametrize("lo, hi, s, d, want", [
    (F(7, 3), F(7, 2), F(49, 18), 2, (F(5, 2), F(3))),
    (F(1), F(2), F(3, 2), 1, (F(1), F(2))),
    (F(3, 2), F(2), F(36, 19), 3, (F(5, 3), F(2))),
])
def test_farey_gap(lo, hi, s, d, want):
    assert farey_gap(lo, hi, s, d) == want


def test_triangle_empty():
    assert triangle_empty((1, 0), (0, 1))
    assert not triangle_empty((2, 0), (0, 1))
    assert triangle_empty((1, 3), (2, 5))
    assert lattice_points_in_triangle((0, 0), (1, 3), (2, 5)) == [(0, 0), (1, 3), (2, 5)]


def test_winding_number():
    assert winding_number(SQUARE, (F(1, 2), F(1, 2))) == 1
    assert winding_number(SQUARE, (2, 2)) == 0
    assert winding_number(SQUARE[::-1], (F(1, 2), F(1, 2))) == -1
    with pytest.raises(ValueError):
        winding_number(SQUARE, (F(1, 2), 0))


# -- properties -----------------------------------------------------------

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(1, 8), st.integers(1, 8))
def test_triangle_empty_matches_scan(a, b, c, d):
    v, w = (a, c), (b, d)
    if det(v, w) == 0:
        return
    pts = lattice_points_in_triangle((0, 0), v, w)
    assert triangle_empty(v, w) == (len(pts) == 3)


@given(fracs, st.fractions(min_value=F(1, 12), max_value=10, max_denominator=12), st.integers(0, 6),
       st.fractions(min_value=0, max_value=1, max_denominator=50))
def test_farey_gap_brackets_and_is_tight(lo, width, d, u):
    hi = lo + width
    s = lo + u * width
    a, b = farey_gap(lo, hi, s, d)
    assert lo <= a <= s <= b <= hi
    # no member strictly between the two
    for q in range(1, d + 1):
        for n in range(int(a * q) - 1, int(b * q) + 2):
            assert not (a < F(n, q) < b)


@given(st.integers(-9, 9), st.integers(1, 9), st.integers(-9, 9), st.integers(1, 9))
def test_mediant_between_neighbours(a, c, b, d):
    if a * d - b * c != -1:
        return
    m = mediant(F(a, c), F(b, d)).value()
    assert F(a, c) < m < F(b, d)


@given(st.lists(st.tuples(fracs, fracs), min_size=3, max_size=7),
       st.fractions(min_value=0, max_value=1, max_denominator=7))
def test_winding_sum_matches_pointwise(loop, c):
    cx = c + F(1, 101)   # keep the lattice off rational vertices with small denominators
    cy = F(1, 103)
    try:
        total = winding_sum(loop, (cx, cy))
    except ValueError:
        return
    xs, ys = [p[0] for p in loop], [p[1] for p in loop]
    brute = 0
    for i in range(int(min(xs)) - 2, int(max(xs)) + 3):
        for j in range(int(min(ys)) - 2, int(max(ys)) + 3):
            try:
                brute += winding_number(loop, (cx + i, cy + j))
            except ValueError:
                return
    assert total == brute


@given(fracs)
def test_parse_roundtrip(x):
    assert parse_rational(f"{x.numerator}/{x.denominator}") == x

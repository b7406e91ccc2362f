"""
Tests for series.py: power-series arithmetic and the corner generating functions.
Run with: python -m pytest tests/test_series.py
"""

from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from series import (
    RECTANGLE_SYMMETRY_TABLE,
    SQUARE_SYMMETRY_TABLE,
    NonDivisibleError,
    PowerSeries,
    burnside_average,
    partition_series,
    ps_add,
    ps_exact_div,
    ps_mul,
    ps_scale,
    ps_shift,
    ps_substitute_power,
    rect_corner_numerator,
    square_corner_numerator,
    rect_corner_series,
    square_corner_series,
    symmetric_corner_series,
)
from shapes import CornerDeletion, iter_partitions

coeff_lists = st.lists(st.integers(min_value=-10**6, max_value=10**6), min_size=1, max_size=12)


@lru_cache(maxsize=None)
def count_partitions(total, largest):
    """Partitions of `total` into parts <= `largest`, by the textbook recursion."""
    if total == 0:
        return 1
    if largest == 0:
        return 0
    return sum(count_partitions(total - part, part) for part in range(1, min(total, largest) + 1))


def test_partition_series_small():
    assert partition_series(10).coeffs == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def test_partition_series_matches_recursion():
    a = partition_series(60)
    for k in range(61):
        assert a[k] == count_partitions(k, k), k


def test_symmetric_corner_series_first_terms():
    assert symmetric_corner_series(6).coeffs == (1, 1, 0, 1, 1, 1, 1)


def test_symmetric_corner_series_counts_self_conjugate_diagrams():
    s = symmetric_corner_series(25)
    for k in range(26):
        expected = sum(CornerDeletion(p).is_self_conjugate for p in iter_partitions(k, k, k))
        assert s[k] == expected, k


def test_rect_and_square_series_first_terms():
    r = rect_corner_series(4)
    q = square_corner_series(4)
    assert r.coeffs[:3] == (1, 1, 5)
    assert q.coeffs[:3] == (1, 1, 3)


def test_orbit_series_match_burnside_tables():
    assert rect_corner_series(30) == burnside_average(RECTANGLE_SYMMETRY_TABLE, 30)
    assert square_corner_series(30) == burnside_average(SQUARE_SYMMETRY_TABLE, 30)


def test_group_orders():
    assert len(SQUARE_SYMMETRY_TABLE) == 8
    assert len(RECTANGLE_SYMMETRY_TABLE) == 4


def test_numerators_divide_exactly_at_high_order():
    # exact division raises if any coefficient is off
    r = rect_corner_series(120)
    q = square_corner_series(120)
    assert all(v > 0 for v in r.coeffs)
    assert all(v > 0 for v in q.coeffs)


def test_numerators_are_multiples_of_group_order_to_200():
    rect = rect_corner_numerator(200)
    square = square_corner_numerator(200)
    assert [k for k, v in enumerate(rect.coeffs) if v % 4] == []
    assert [k for k, v in enumerate(square.coeffs) if v % 8] == []


def test_symmetric_series_uses_durfee_offsets():
    # only the k = 1 term (x * 1/(1 - x^2)) reaches below x^4
    assert symmetric_corner_series(3) == ps_add(PowerSeries.one(3), ps_shift(PowerSeries((1, 0, 1, 0)), 1))


def test_exact_div_reports_the_offending_index():
    with pytest.raises(NonDivisibleError) as info:
        ps_exact_div(PowerSeries((4, 8, 9)), 4)
    assert info.value.index == 2
    assert info.value.value == 9


def test_exact_div_rejects_bad_divisor():
    with pytest.raises(ValueError):
        ps_exact_div(PowerSeries((1,)), 0)


def test_add_truncates_to_shorter():
    f = PowerSeries((1, 2, 3))
    g = PowerSeries((1, 1))
    assert ps_add(f, g).coeffs == (2, 3)


def test_shift_and_substitute():
    f = PowerSeries((1, 2, 3, 4))
    assert ps_shift(f, 2).coeffs == (0, 0, 1, 2)
    assert ps_substitute_power(f, 2).coeffs == (1, 0, 2, 0)
    with pytest.raises(ValueError):
        ps_substitute_power(f, 0)


def test_index_outside_truncation():
    with pytest.raises(IndexError):
        PowerSeries((1, 2))[2]


def test_constructors():
    assert PowerSeries.zero(2).coeffs == (0, 0, 0)
    assert PowerSeries.one(2).coeffs == (1, 0, 0)
    assert PowerSeries.monomial(5, 2).coeffs == (0, 0, 0)
    assert PowerSeries.from_coeffs([1, 2], order=3).coeffs == (1, 2, 0, 0)
    with pytest.raises(ValueError):
        PowerSeries(())


def test_no_overflow_at_large_order():
    # p(200) = 3972999029388
    assert partition_series(200)[200] == 3972999029388
    assert rect_corner_numerator(200)[200] % 4 == 0


@given(coeff_lists, coeff_lists)
def test_mul_commutes(f, g):
    assert ps_mul(PowerSeries(tuple(f)), PowerSeries(tuple(g))) == ps_mul(PowerSeries(tuple(g)), PowerSeries(tuple(f)))


@given(coeff_lists)
def test_mul_by_one_is_identity(f):
    series = PowerSeries(tuple(f))
    assert ps_mul(series, PowerSeries.one(series.order)) == series


@given(coeff_lists, st.integers(min_value=1, max_value=50))
def test_scaled_series_divides_back(f, d):
    series = PowerSeries(tuple(f))
    assert ps_exact_div(ps_scale(series, d), d) == series

"""
Tests for counting.py: p(n), B(n), the case split, candidate rectangles and e(n).
Run with: python -m pytest tests/test_counting.py
"""

import math

import pytest
from hypothesis import given, strategies as st

from counting import (
    CaseTag,
    RectangleCandidate,
    SeriesIndexError,
    _coefficient,
    candidate_rectangles,
    ceil_sqrt,
    classify,
    corner_series,
    count_extremal,
    count_from_candidates,
    extremal_terms,
    max_area_for_boundary,
    max_common_edges,
    min_perimeter,
    s_floor,
    tabulate,
)
from known_values import E_LIST, E_SQ_PLUS_1, E_SQ_S_1


@pytest.mark.parametrize("n, p", [(1, 4), (2, 6), (3, 8), (4, 8), (5, 10), (7, 12), (9, 12), (10, 14), (12, 14), (13, 16)])
def test_min_perimeter(n, p):
    assert min_perimeter(n) == p


@pytest.mark.parametrize("n, b", [(1, 0), (2, 1), (4, 4), (7, 8), (9, 12)])
def test_max_common_edges(n, b):
    assert max_common_edges(n) == b


def test_perimeter_and_common_edges_are_consistent():
    for n in range(1, 2000):
        assert min_perimeter(n) == 4 * n - 2 * max_common_edges(n)
        assert min_perimeter(n) % 2 == 0


@given(st.integers(min_value=1, max_value=10**6))
def test_perimeter_edge_duality_to_a_million(n):
    assert min_perimeter(n) == 4 * n - 2 * max_common_edges(n)


def test_min_perimeter_is_non_decreasing():
    values = [min_perimeter(n) for n in range(1, 20001)]
    assert all(a <= b for a, b in zip(values, values[1:]))


@given(st.integers(min_value=1, max_value=10**30))
def test_min_perimeter_is_exact_for_huge_n(n):
    p = min_perimeter(n)
    # p/2 is the smallest integer whose square is >= 4n
    half = p // 2
    assert half * half >= 4 * n
    assert (half - 1) * (half - 1) < 4 * n


def test_ceil_sqrt():
    assert [ceil_sqrt(m) for m in range(10)] == [0, 1, 2, 2, 2, 3, 3, 3, 3, 3]
    with pytest.raises(ValueError):
        ceil_sqrt(-1)


@pytest.mark.parametrize("bad", [0, -3])
def test_rejects_non_positive(bad):
    with pytest.raises(ValueError):
        min_perimeter(bad)
    with pytest.raises(ValueError):
        classify(bad)


@pytest.mark.parametrize("n, s, t, tag", [
    (1, 1, 0, CaseTag.I),
    (2, 1, 0, CaseTag.III),
    (3, 1, 1, CaseTag.IV),
    (9, 3, 0, CaseTag.I),
    (10, 3, 1, CaseTag.II),
    (12, 3, 0, CaseTag.III),
    (13, 3, 1, CaseTag.IV),
    (15, 3, 3, CaseTag.IV),
])
def test_classify(n, s, t, tag):
    case = classify(n)
    assert (case.s_floor, case.t, case.case_tag) == (s, t, tag)


@given(st.integers(min_value=1, max_value=10**12))
def test_classify_reconstructs_n(n):
    case = classify(n)
    assert case.reconstruct() == n
    assert case.s_floor == math.isqrt(n)


def test_candidate_rectangles_for_ten():
    rects = candidate_rectangles(10)
    assert [(r.a, r.b, r.c, r.surplus) for r in rects] == [(4, 3, 0, 2), (5, 2, 1, 0)]


def test_candidate_rectangles_invariants():
    for n in range(1, 1000):
        for rect in candidate_rectangles(n):
            assert rect.a >= rect.b >= 1
            assert rect.a * rect.b - rect.surplus == n
            assert rect.surplus < rect.b
            assert rect.boundary_len == min_perimeter(n) - 4


def test_rectangle_candidate_validation():
    with pytest.raises(ValueError):
        RectangleCandidate(2, 3, 0, 0)
    with pytest.raises(ValueError):
        RectangleCandidate(3, 2, 0, -1)


@pytest.mark.parametrize("h, area", [(4, 4), (6, 6), (8, 9), (10, 12), (12, 16), (14, 20)])
def test_max_area_for_boundary(h, area):
    assert max_area_for_boundary(h) == area


@pytest.mark.parametrize("bad", [3, 5, 2, 0])
def test_max_area_rejects_bad_lengths(bad):
    with pytest.raises(ValueError):
        max_area_for_boundary(bad)


@pytest.mark.parametrize("n, e", [(1, 1), (3, 2), (7, 4), (10, 6), (13, 11), (50, 182), (133, 5289)])
def test_count_extremal_examples(n, e):
    assert count_extremal(n) == e


def test_count_extremal_matches_published_list():
    assert [count_extremal(n) for n in range(1, len(E_LIST) + 1)] == list(E_LIST)


def test_count_extremal_matches_published_maxima():
    assert [count_extremal(s * s + 1) for s in range(1, 50)] == list(E_SQ_PLUS_1)
    assert [count_extremal(s * s + s + 1) for s in range(1, 50)] == list(E_SQ_S_1)
    assert count_extremal(49 * 49 + 1) == 80751193346
    assert count_extremal(49 * 49 + 49 + 1) == 104083151128


def test_squares_and_pronics_have_one_shape():
    for s in range(1, 60):
        assert count_extremal(s * s) == 1
        assert count_extremal(s * s + s) == 1


def test_local_maxima():
    for s in range(3, 41):
        assert count_extremal(s * s + 1) > count_extremal(s * s + 2)
    for s in range(1, 41):
        assert count_extremal(s * s + s + 1) > count_extremal(s * s + s + 2)


def test_four_case_formula_agrees_with_rectangle_sum():
    for n in range(1, 1500):
        assert count_from_candidates(n) == count_extremal(n), n


def test_extremal_terms_for_ten():
    terms = extremal_terms(10)
    # 4x3 with 2 cells to delete gives r_2 = 5, 5x2 with none gives r_0 = 1
    assert [(rect.a, rect.b, k) for rect, k in terms] == [(4, 3, 5), (5, 2, 1)]


def test_corner_series_cache_grows():
    r, q = corner_series(5)
    assert r.order >= 5
    r2, q2 = corner_series(3)
    assert r2 is r and q2 is q
    bigger, _ = corner_series(r.order + 1)
    assert bigger.order > r.order
    assert bigger.coeffs[: r.order + 1] == r.coeffs


def test_coefficient_out_of_range():
    r, _ = corner_series(4)
    with pytest.raises(SeriesIndexError):
        _coefficient(r, -1)
    with pytest.raises(SeriesIndexError):
        _coefficient(r, r.order + 1)


def test_s_floor():
    assert [s_floor(n) for n in (1, 3, 4, 8, 9, 10**20)] == [1, 1, 2, 2, 3, 10**10]


def test_tabulate():
    table = tabulate(1, 13)
    assert list(table.columns) == ["n", "p", "B", "case", "e"]
    assert len(table) == 13
    assert table.iloc[6].tolist() == [7, 12, 8, "IV", 4]
    assert list(table["e"]) == list(E_LIST[:13])
    with pytest.raises(ValueError):
        tabulate(5, 4)


def test_e_decreases_to_one_along_each_run():
    # within s^2 < n < s^2 + s and s^2 + s < n <= (s + 1)^2 the count never rises
    for s in range(1, 54):
        for run in (range(s * s + 1, s * s + s + 1), range(s * s + s + 1, (s + 1) ** 2 + 1)):
            values = [count_extremal(n) for n in run]
            assert all(a >= b for a, b in zip(values, values[1:])), (s, values)
            assert values[-1] == 1

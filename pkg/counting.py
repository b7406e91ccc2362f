"""
File: counting.py
Created: 2026-10-19
Purpose: Closed-form side of the minimum-perimeter problem:
         p(n) = 2*ceil(2*sqrt(n)), the common-edge maximum B(n), the area bound A(|H|),
         the four-way case split of n, the candidate rectangles of the deletion process,
         and the exact count e(n) of extremal free polyominoes.
Input: positive integers n
Output: Python ints, CaseClassification / RectangleCandidate records, pandas tables

All square roots are integer square roots (math.isqrt); no floating point anywhere.
"""

import logging
import math
import threading
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

import pandas as pd

from series import PowerSeries, rect_corner_series, square_corner_series

logger = logging.getLogger(__name__)

# Configuration
SERIES_HEADROOM = 2  # r/q indices never exceed s_floor + 1


class SeriesIndexError(IndexError):
    """An r/q subscript fell outside [0, truncation]; the case bounds forbid it."""


class CaseTag(str, Enum):
    I = "I"      # n = s^2
    II = "II"    # n = s^2 + t, 0 < t < s
    III = "III"  # n = s^2 + s
    IV = "IV"    # n = s^2 + s + t, 0 < t <= s

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CaseClassification:
    n: int
    s_floor: int
    t: int
    case_tag: CaseTag

    def reconstruct(self) -> int:
        """Rebuild n from (s_floor, t, case_tag)."""
        s = self.s_floor
        if self.case_tag in (CaseTag.I, CaseTag.II):
            return s * s + self.t
        return s * s + s + self.t


@dataclass(frozen=True)
class RectangleCandidate:
    """An a x b rectangle (a >= b) from which `surplus` corner cells are deleted."""

    a: int
    b: int
    c: int
    surplus: int

    def __post_init__(self):
        if self.b < 1 or self.a < self.b:
            raise ValueError(f"need a >= b >= 1, got a={self.a}, b={self.b}")
        if self.surplus < 0:
            raise ValueError(f"surplus must be >= 0, got {self.surplus}")

    @property
    def boundary_len(self) -> int:
        """Length of the boundary walk of the full rectangle, 2a + 2b - 4."""
        return 2 * self.a + 2 * self.b - 4

    @property
    def is_square(self) -> bool:
        return self.a == self.b

    @property
    def order(self) -> int:
        return self.a * self.b - self.surplus


# ---------------------------------------------------------------------------
# Integer roots and the basic formulas
# ---------------------------------------------------------------------------

def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")


def s_floor(n: int) -> int:
    """floor(sqrt(n))."""
    return math.isqrt(n)


def ceil_sqrt(m: int) -> int:
    """ceil(sqrt(m)) for m >= 0."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m == 0:
        return 0
    return math.isqrt(m - 1) + 1


def min_perimeter(n: int) -> int:
    """p(n) = 2 * ceil(2 * sqrt(n)) = 2 * ceil(sqrt(4n))."""
    _require_positive(n)
    return 2 * ceil_sqrt(4 * n)


def max_common_edges(n: int) -> int:
    """B(n) = 2n - ceil(2 * sqrt(n))."""
    _require_positive(n)
    return 2 * n - ceil_sqrt(4 * n)


def max_area_for_boundary(H_len: int) -> int:
    """A(|H|): largest area of an h1 = 0 polyomino whose boundary walk has H_len squares.

    The bound is the area of the rectangle with a = ceil((H+4)/4), b = floor((H+4)/4),
    i.e. ((H+4)/4)^2 when H = 0 mod 4 and ((H+4)/4)^2 - 1/4 when H = 2 mod 4.
    """
    if H_len % 2:
        raise ValueError(f"boundary cycle length must be even, got {H_len}")
    if H_len < 4:
        raise ValueError(f"boundary cycle length must be >= 4, got {H_len}")
    half_perimeter = H_len + 4
    a = -(-half_perimeter // 4)
    b = half_perimeter // 4
    return a * b


def classify(n: int) -> CaseClassification:
    _require_positive(n)
    s = s_floor(n)
    t = n - s * s
    if t == 0:
        return CaseClassification(n, s, 0, CaseTag.I)
    if t < s:
        return CaseClassification(n, s, t, CaseTag.II)
    if t == s:
        return CaseClassification(n, s, 0, CaseTag.III)
    return CaseClassification(n, s, t - s, CaseTag.IV)


def _case_ii_c_max(s: int, t: int) -> int:
    """floor(-1/2 + sqrt(1 + 4s - 4t) / 2), exactly."""
    return (math.isqrt(1 + 4 * s - 4 * t) - 1) // 2


def _case_iv_c_max(s: int, t: int) -> int:
    """floor(sqrt(1 + s - t)); the same bound is also written floor(sqrt(s + 1 - t))."""
    return math.isqrt(1 + s - t)


def candidate_rectangles(n: int) -> List[RectangleCandidate]:
    """Minimal-perimeter rectangles with area >= n that the deletion process starts from."""
    case = classify(n)
    s, t = case.s_floor, case.t
    if case.case_tag is CaseTag.I:
        rects = [RectangleCandidate(s, s, 0, 0)]
    elif case.case_tag is CaseTag.III:
        rects = [RectangleCandidate(s + 1, s, 0, 0)]
    elif case.case_tag is CaseTag.II:
        rects = []
        for c in range(_case_ii_c_max(s, t) + 1):
            a, b = s + 1 + c, s - c
            rects.append(RectangleCandidate(a, b, c, a * b - n))
    else:
        rects = []
        for c in range(_case_iv_c_max(s, t) + 1):
            a, b = s + 1 + c, s + 1 - c
            rects.append(RectangleCandidate(a, b, c, a * b - n))

    boundary = min_perimeter(n) - 4
    for rect in rects:
        if rect.a * rect.b < n or rect.surplus >= rect.b or rect.boundary_len != boundary:
            raise AssertionError(f"invalid candidate {rect} for n={n}")
    return rects


# ---------------------------------------------------------------------------
# e(n)
# ---------------------------------------------------------------------------

_series_lock = threading.Lock()
_series_cache: Tuple[PowerSeries, PowerSeries] = ()


def corner_series(order: int) -> Tuple[PowerSeries, PowerSeries]:
    """(r, q) truncated at >= `order`; built once and regrown only when a larger order is asked."""
    global _series_cache
    cached = _series_cache
    if cached and cached[0].order >= order:
        return cached
    with _series_lock:
        if not _series_cache or _series_cache[0].order < order:
            grown = max(order, 2 * _series_cache[0].order if _series_cache else order)
            logger.info(f"[INFO] Building corner series r(x), q(x) to order {grown}")
            _series_cache = (rect_corner_series(grown), square_corner_series(grown))
        return _series_cache


def _coefficient(series: PowerSeries, k: int) -> int:
    if k < 0 or k > series.order:
        raise SeriesIndexError(f"subscript {k} outside 0..{series.order}")
    return series[k]


def count_extremal(n: int) -> int:
    """e(n): free polyominoes with n cells and perimeter p(n)."""
    case = classify(n)
    s, t = case.s_floor, case.t
    if case.case_tag in (CaseTag.I, CaseTag.III):
        return 1

    r, q = corner_series(s + SERIES_HEADROOM)
    if case.case_tag is CaseTag.II:
        return sum(_coefficient(r, s - c - c * c - t) for c in range(_case_ii_c_max(s, t) + 1))

    total = _coefficient(q, s + 1 - t)
    for c in range(1, _case_iv_c_max(s, t) + 1):
        total += _coefficient(r, s + 1 - c * c - t)
    return total


def extremal_terms(n: int) -> List[Tuple[RectangleCandidate, int]]:
    """Each candidate rectangle with the number of deletion classes it contributes."""
    rects = candidate_rectangles(n)
    r, q = corner_series(max(rect.surplus for rect in rects) + SERIES_HEADROOM)
    terms = []
    for rect in rects:
        series = q if rect.is_square else r
        terms.append((rect, _coefficient(series, rect.surplus)))
    return terms


def count_from_candidates(n: int) -> int:
    """e(n) summed over candidate rectangles instead of the four-case formula."""
    return sum(coefficient for _, coefficient in extremal_terms(n))


def tabulate(n_from: int, n_to: int) -> pd.DataFrame:
    """One row per n in [n_from, n_to]: n, p, B, case, e."""
    _require_positive(n_from, "n_from")
    if n_to < n_from:
        raise ValueError(f"empty range {n_from}..{n_to}")
    corner_series(s_floor(n_to) + SERIES_HEADROOM)
    rows = []
    for n in range(n_from, n_to + 1):
        rows.append({
            "n": n,
            "p": min_perimeter(n),
            "B": max_common_edges(n),
            "case": str(classify(n).case_tag),
            "e": count_extremal(n),
        })
    table = pd.DataFrame(rows, columns=["n", "p", "B", "case", "e"])
    # keep e as Python ints; large orders outgrow int64
    table["e"] = table["e"].astype(object)
    return table

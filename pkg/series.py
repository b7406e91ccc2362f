"""
File: series.py
Created: 2026-10-19
Purpose: Exact truncated formal power series over Python integers, plus the four
         generating functions used to count minimum-perimeter polyominoes:
         a(x) (one corner's Ferrers diagrams), s(x) (diagonally symmetric corners),
         r(x) and q(x) (corner deletions of a rectangle / square up to symmetry).
Input: truncation degree N chosen by the caller (counting.py asks for isqrt(n) + 2)
Output: immutable PowerSeries values

Coefficients are plain Python ints, so nothing overflows: e(s^2+1) at s = 49 is
already 8e10 and r/q at higher orders grow without bound.

Naming note: the symmetric-corner series is s(x) in the usual notation, which clashes
with s = floor(sqrt(n)). Here the integer is `s_floor` (counting.py) and the series is
`symmetric_corner_series`.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


class NonDivisibleError(ArithmeticError):
    """Raised by ps_exact_div when a coefficient is not a multiple of the divisor."""

    def __init__(self, index: int, value: int, divisor: int):
        self.index = index
        self.value = value
        self.divisor = divisor
        super().__init__(f"coefficient {value} at index {index} is not divisible by {divisor}")


@dataclass(frozen=True)
class PowerSeries:
    """Truncated power series sum(coeffs[i] * x^i for i in 0..order)."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a PowerSeries needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if k < 0 or k > self.order:
            raise IndexError(f"index {k} outside truncation 0..{self.order}")
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_add(self, other)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        return ps_mul(self, other)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: Optional[int] = None) -> "PowerSeries":
        """Build a series, padding with zeros (or cutting) to `order` when given."""
        values = list(coeffs)
        if order is not None:
            values = (values + [0] * (order + 1))[: order + 1]
        return cls(tuple(values))

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int) -> "PowerSeries":
        """x^k truncated at `order` (the zero series if k > order)."""
        coeffs = [0] * (order + 1)
        if k <= order:
            coeffs[k] = 1
        return cls(tuple(coeffs))


# ---------------------------------------------------------------------------
# Arithmetic
# ---------------------------------------------------------------------------

def ps_add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Coefficient-wise sum truncated to the shorter order."""
    order = min(f.order, g.order)
    return PowerSeries(tuple(f.coeffs[i] + g.coeffs[i] for i in range(order + 1)))


def ps_scale(f: PowerSeries, c: int) -> PowerSeries:
    """Multiply every coefficient by the integer c."""
    return PowerSeries(tuple(c * v for v in f.coeffs))


def ps_shift(f: PowerSeries, k: int) -> PowerSeries:
    """x^k * f, keeping the order of f."""
    if k < 0:
        raise ValueError(f"shift must be non-negative, got {k}")
    return PowerSeries.from_coeffs([0] * k + list(f.coeffs), order=f.order)


def ps_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Truncated Cauchy product (schoolbook, skipping zero coefficients)."""
    order = min(f.order, g.order)
    out = [0] * (order + 1)
    fc, gc = f.coeffs, g.coeffs
    for i in range(order + 1):
        fi = fc[i]
        if not fi:
            continue
        for j in range(order + 1 - i):
            gj = gc[j]
            if gj:
                out[i + j] += fi * gj
    return PowerSeries(tuple(out))


def ps_substitute_power(f: PowerSeries, k: int) -> PowerSeries:
    """f(x^k) truncated to the order of f."""
    if k < 1:
        raise ValueError(f"substitution power must be >= 1, got {k}")
    out = [0] * (f.order + 1)
    for i in range(f.order // k + 1):
        out[k * i] = f.coeffs[i]
    return PowerSeries(tuple(out))


def ps_exact_div(f: PowerSeries, d: int) -> PowerSeries:
    """Divide every coefficient by d; any remainder is a bug upstream."""
    if d < 1:
        raise ValueError(f"divisor must be >= 1, got {d}")
    out = []
    for i, v in enumerate(f.coeffs):
        q, rem = divmod(v, d)
        if rem:
            raise NonDivisibleError(i, v, d)
        out.append(q)
    return PowerSeries(tuple(out))


def _divide_by_one_minus_power(coeffs: list, j: int) -> None:
    """In place: coeffs <- coeffs / (1 - x^j), i.e. a prefix sum with stride j."""
    for i in range(j, len(coeffs)):
        coeffs[i] += coeffs[i - j]


# ---------------------------------------------------------------------------
# Named generating functions
# ---------------------------------------------------------------------------

def partition_series(N: int) -> PowerSeries:
    """a(x) = prod_{j>=1} 1/(1 - x^j): coefficient k is the number of partitions of k."""
    if N < 0:
        raise ValueError(f"truncation degree must be >= 0, got {N}")
    coeffs = list(PowerSeries.one(N).coeffs)
    for j in range(1, N + 1):
        _divide_by_one_minus_power(coeffs, j)
    return PowerSeries(tuple(coeffs))


def symmetric_corner_series(N: int) -> PowerSeries:
    """s(x) = 1 + sum_{k>=1} x^(k^2) prod_{j=1..k} 1/(1 - x^(2j)).

    Coefficient k counts Ferrers diagrams of k cells that are symmetric about the
    corner diagonal, grouped by Durfee square size.
    """
    if N < 0:
        raise ValueError(f"truncation degree must be >= 0, got {N}")
    total = PowerSeries.one(N)
    # running product prod_{j<=k} 1/(1 - x^(2j))
    product = list(PowerSeries.one(N).coeffs)
    k = 1
    while k * k <= N:
        _divide_by_one_minus_power(product, 2 * k)
        total = total + ps_shift(PowerSeries(tuple(product)), k * k)
        k += 1
    return total


@dataclass(frozen=True)
class SymmetryTerm:
    """One corner permutation and the series of deletion sets it fixes."""

    cycles: str
    fixed_series: Callable[[int], PowerSeries]


def _identity_fixed(N: int) -> PowerSeries:
    a = partition_series(N)
    a2 = a * a
    return a2 * a2


def _quarter_turn_fixed(N: int) -> PowerSeries:
    return ps_substitute_power(partition_series(N), 4)


def _paired_corners_fixed(N: int) -> PowerSeries:
    a_sq = ps_substitute_power(partition_series(N), 2)
    return a_sq * a_sq


def _diagonal_mirror_fixed(N: int) -> PowerSeries:
    s = symmetric_corner_series(N)
    return s * s * ps_substitute_power(partition_series(N), 2)


# Corners labelled 1 (top left), 2 (top right), 3 (bottom right), 4 (bottom left).
SQUARE_SYMMETRY_TABLE: Tuple[SymmetryTerm, ...] = (
    SymmetryTerm("(1)(2)(3)(4)", _identity_fixed),
    SymmetryTerm("(1,2,3,4)", _quarter_turn_fixed),
    SymmetryTerm("(1,3)(2,4)", _paired_corners_fixed),
    SymmetryTerm("(1,4,3,2)", _quarter_turn_fixed),
    SymmetryTerm("(1,2)(3,4)", _paired_corners_fixed),
    SymmetryTerm("(1,4)(2,3)", _paired_corners_fixed),
    SymmetryTerm("(1,3)(2)(4)", _diagonal_mirror_fixed),
    SymmetryTerm("(1)(2,4)(3)", _diagonal_mirror_fixed),
)

RECTANGLE_SYMMETRY_TABLE: Tuple[SymmetryTerm, ...] = (
    SymmetryTerm("(1)(2)(3)(4)", _identity_fixed),
    SymmetryTerm("(1,3)(2,4)", _paired_corners_fixed),
    SymmetryTerm("(1,2)(3,4)", _paired_corners_fixed),
    SymmetryTerm("(1,4)(2,3)", _paired_corners_fixed),
)


def burnside_numerator(table: Sequence[SymmetryTerm], N: int) -> PowerSeries:
    """Sum of the fixed-set series over every group element in `table`."""
    total = PowerSeries.zero(N)
    cache = {}
    for term in table:
        # several elements share a builder; build each once
        if term.fixed_series not in cache:
            cache[term.fixed_series] = term.fixed_series(N)
        total = total + cache[term.fixed_series]
    return total


def burnside_average(table: Sequence[SymmetryTerm], N: int) -> PowerSeries:
    """Orbit-counting series: the numerator divided exactly by the group order."""
    averaged = ps_exact_div(burnside_numerator(table, N), len(table))
    logger.debug(f"[OK] {len(table)}-element orbit series built to order {N}")
    return averaged


def rect_corner_numerator(N: int) -> PowerSeries:
    """a(x)^4 + 3 a(x^2)^2."""
    return _identity_fixed(N) + ps_scale(_paired_corners_fixed(N), 3)


def square_corner_numerator(N: int) -> PowerSeries:
    """a(x)^4 + 3 a(x^2)^2 + 2 s(x)^2 a(x^2) + 2 a(x^4)."""
    return (
        rect_corner_numerator(N)
        + ps_scale(_diagonal_mirror_fixed(N), 2)
        + ps_scale(_quarter_turn_fixed(N), 2)
    )


def rect_corner_series(N: int) -> PowerSeries:
    """r(x) = (a(x)^4 + 3 a(x^2)^2) / 4."""
    if N < 0:
        raise ValueError(f"truncation degree must be >= 0, got {N}")
    return ps_exact_div(rect_corner_numerator(N), 4)


def square_corner_series(N: int) -> PowerSeries:
    """q(x) = (a(x)^4 + 3 a(x^2)^2 + 2 s(x)^2 a(x^2) + 2 a(x^4)) / 8."""
    if N < 0:
        raise ValueError(f"truncation degree must be >= 0, got {N}")
    return ps_exact_div(square_corner_numerator(N), 8)

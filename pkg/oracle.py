"""
File: oracle.py
Created: 2026-10-19
Purpose: Brute-force ground truth for the closed forms in counting.py and the construction
         in shapes.py. Grows every free polyomino up to a small order, filters the
         minimum-perimeter ones, and traces boundary walks to check the structural
         lemmas (angle sum, common-edge count, area bound, extremal cycle length).
Input: order n <= ORACLE_CAP
Output: canonical Polyomino sets, BoundaryStats, LemmaReport / OrderComparison records

Nothing here is clever on purpose: growth plus canonical-form dedup, a flood fill for
holes and an edge-following walk for the boundary.
"""

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Set, Tuple

import numpy as np
from tqdm import tqdm

from counting import count_extremal, max_area_for_boundary, max_common_edges, min_perimeter
from shapes import (
    CapExceededError,
    Cell,
    Polyomino,
    canonical_key,
    common_edges,
    enumerate_extremal,
    is_connected,
    neighbours,
    perimeter,
)

logger = logging.getLogger(__name__)

# Configuration
ORACLE_CAP = 12  # 126,759 free 12-ominoes
LEMMA_CORPUS_MAX = 10
AREA_BOUND_MAX = 16  # largest cycle length whose extremal rectangle is checked


class HasHoleError(ValueError):
    """The boundary walk is only defined for hole-free polyominoes."""


class DisconnectedError(ValueError):
    """The boundary walk is only defined for edge-connected cell sets."""


@dataclass(frozen=True)
class BoundaryStats:
    cycle_len: int
    h1: int
    h2: int
    h3: int
    h4: int
    is_simple: bool = True  # no square visited twice

    def __post_init__(self):
        if self.cycle_len != self.h1 + self.h2 + self.h3 + self.h4:
            raise ValueError(f"degree counts do not add up to the cycle length: {self}")


# ---------------------------------------------------------------------------
# Free polyomino growth
# ---------------------------------------------------------------------------

_levels: Dict[int, FrozenSet[Tuple[Cell, ...]]] = {1: frozenset({((0, 0),)})}


def _grow(parents: FrozenSet[Tuple[Cell, ...]], n: int, progress: bool) -> FrozenSet[Tuple[Cell, ...]]:
    children: Set[Tuple[Cell, ...]] = set()
    for parent in tqdm(sorted(parents), desc=f"Growing order {n}", disable=not progress):
        occupied = set(parent)
        frontier = {nb for cell in parent for nb in neighbours(cell) if nb not in occupied}
        for cell in frontier:
            children.add(canonical_key(parent + (cell,)))
    return frozenset(children)


def enumerate_free(n: int, cap: int = ORACLE_CAP, progress: bool = False) -> FrozenSet[Polyomino]:
    """All free polyominoes of order n, grown one cell at a time from the monomino."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(n, cap, "free polyomino enumeration")
    top = max(k for k in _levels if k <= n)
    for k in range(top + 1, n + 1):
        _levels[k] = _grow(_levels[k - 1], k, progress)
        logger.info(f"[OK] {len(_levels[k])} free polyominoes of order {k}")
    return frozenset(Polyomino(key) for key in _levels[n])


def extremal_shapes_by_brute_force(n: int, cap: int = ORACLE_CAP) -> FrozenSet[Polyomino]:
    shapes = enumerate_free(n, cap)
    best = min(perimeter(p) for p in shapes)
    return frozenset(p for p in shapes if perimeter(p) == best)


def extremal_by_brute_force(n: int, cap: int = ORACLE_CAP) -> Tuple[int, int]:
    """(minimum perimeter over all n-ominoes, number of shapes attaining it)."""
    counts = Counter(perimeter(p) for p in enumerate_free(n, cap))
    best = min(counts)
    return best, counts[best]


def max_common_edges_oracle(n: int, cap: int = ORACLE_CAP) -> int:
    return max(common_edges(p) for p in enumerate_free(n, cap))


# ---------------------------------------------------------------------------
# Holes and the boundary walk
# ---------------------------------------------------------------------------

def has_hole(p: Polyomino) -> bool:
    """Flood-fill the empty squares from outside the bounding box; anything missed is a hole."""
    rows = max(r for r, _ in p.cells) + 3
    cols = max(c for _, c in p.cells) + 3
    filled = np.zeros((rows, cols), dtype=bool)
    for r, c in p.cells:
        filled[r + 1, c + 1] = True
    reached = np.zeros_like(filled)
    reached[0, 0] = True
    queue = deque([(0, 0)])
    while queue:
        r, c = queue.popleft()
        for nr, nc in neighbours((r, c)):
            if 0 <= nr < rows and 0 <= nc < cols and not filled[nr, nc] and not reached[nr, nc]:
                reached[nr, nc] = True
                queue.append((nr, nc))
    return bool(np.any(~filled & ~reached))


def _directed_edges(p: Polyomino) -> Dict[Cell, Tuple[Cell, Cell, Cell]]:
    """start vertex -> (end vertex, owning cell, direction), clockwise on screen."""
    cells = p.cell_set
    edges: Dict[Cell, Tuple[Cell, Cell, Cell]] = {}

    def add(start, end, cell, direction):
        if start in edges:
            raise HasHoleError(f"boundary touches itself at vertex {start}")
        edges[start] = (end, cell, direction)

    for r, c in p.cells:
        if (r - 1, c) not in cells:
            add((r, c), (r, c + 1), (r, c), (0, 1))
        if (r, c + 1) not in cells:
            add((r, c + 1), (r + 1, c + 1), (r, c), (1, 0))
        if (r + 1, c) not in cells:
            add((r + 1, c + 1), (r + 1, c), (r, c), (0, -1))
        if (r, c - 1) not in cells:
            add((r + 1, c), (r, c), (r, c), (-1, 0))
    return edges


def _turns_left(d1: Cell, d2: Cell) -> bool:
    # clockwise on screen is (dr, dc) -> (dc, -dr)
    return d2 == (-d1[1], d1[0])


def boundary_walk(p: Polyomino) -> Tuple[Cell, ...]:
    """The closed walk through the boundary squares, starting at the smallest boundary edge.

    A square appears once per visit; squares where the walk passes twice repeat.
    """
    if not is_connected(p.cells):
        raise DisconnectedError("boundary walk needs an edge-connected polyomino")
    if has_hole(p):
        raise HasHoleError("boundary walk needs a hole-free polyomino")
    if p.order == 1:
        return ()

    edges = _directed_edges(p)
    start = min(edges)
    ordered = []
    vertex = start
    while True:
        end, cell, direction = edges[vertex]
        ordered.append((cell, direction))
        vertex = end
        if vertex == start:
            break
    if len(ordered) != len(edges):
        raise HasHoleError("boundary splits into more than one cycle")

    walk: List[Cell] = []
    for i, (cell, direction) in enumerate(ordered):
        walk.append(cell)
        _, next_direction = ordered[(i + 1) % len(ordered)]
        if _turns_left(direction, next_direction):
            # concave corner: the walk passes through the square inside the turn
            walk.append((cell[0] + direction[0], cell[1] + direction[1]))

    compressed: List[Cell] = []
    for cell in walk:
        if not compressed or compressed[-1] != cell:
            compressed.append(cell)
    while len(compressed) > 1 and compressed[-1] == compressed[0]:
        compressed.pop()
    return tuple(compressed)


def degree(p: Polyomino, cell: Cell) -> int:
    cells = p.cell_set
    return sum(nb in cells for nb in neighbours(cell))


def boundary_stats(p: Polyomino) -> BoundaryStats:
    walk = boundary_walk(p)
    degrees = Counter(degree(p, cell) for cell in walk)
    return BoundaryStats(
        cycle_len=len(walk),
        h1=degrees[1],
        h2=degrees[2],
        h3=degrees[3],
        h4=degrees[4],
        is_simple=len(set(walk)) == len(walk),
    )


# ---------------------------------------------------------------------------
# Lemma checks
# ---------------------------------------------------------------------------

def hole_free_corpus(n_max: int = LEMMA_CORPUS_MAX, cap: int = ORACLE_CAP) -> List[Tuple[Polyomino, BoundaryStats]]:
    """Every hole-free free polyomino with 2 <= n <= n_max, paired with its boundary stats."""
    corpus = []
    for n in range(2, n_max + 1):
        for p in sorted(enumerate_free(n, cap)):
            if not has_hole(p):
                corpus.append((p, boundary_stats(p)))
    return corpus


@dataclass
class LemmaReport:
    n_max: int
    shapes_checked: int = 0  # hole-free with h1 = 0
    angle_sum_checked: int = 0
    angle_sum_excluded: int = 0  # walk revisits a square
    angle_sum_failures: int = 0
    edge_count_failures: int = 0
    area_bound_failures: List[int] = field(default_factory=list)  # cycle lengths
    area_bound_attained: List[int] = field(default_factory=list)  # cycle lengths where max order = A(L)
    extremal_checked: int = 0
    extremal_cycle_failures: int = 0

    @property
    def ok(self) -> bool:
        return not (
            self.angle_sum_failures
            or self.edge_count_failures
            or self.area_bound_failures
            or self.extremal_cycle_failures
        )

    def _area_bound_text(self) -> str:
        if self.area_bound_failures:
            return f"FAIL at L={self.area_bound_failures}"
        if not self.area_bound_attained:
            return "OK"
        return f"OK, attained for L={self.area_bound_attained[0]}..{self.area_bound_attained[-1]}"

    def summary(self) -> str:
        return (
            f"angle sum {self.angle_sum_checked - self.angle_sum_failures}/{self.angle_sum_checked} "
            f"({self.angle_sum_excluded} non-simple skipped); "
            f"edge count {self.shapes_checked - self.edge_count_failures}/{self.shapes_checked}; "
            f"area bound {self._area_bound_text()}; "
            f"extremal cycle {self.extremal_checked - self.extremal_cycle_failures}/{self.extremal_checked}"
        )


def check_lemmas(n_max: int = LEMMA_CORPUS_MAX, cap: int = ORACLE_CAP) -> LemmaReport:
    """Run the four boundary lemmas over the hole-free h1 = 0 corpus up to n_max."""
    report = LemmaReport(n_max=n_max)
    largest: Dict[int, int] = {}

    for p, stats in hole_free_corpus(n_max, cap):
        if stats.h1:
            continue
        n = p.order
        report.shapes_checked += 1

        if stats.is_simple:
            report.angle_sum_checked += 1
            if stats.h2 != stats.h4 + 4:
                report.angle_sum_failures += 1
                logger.debug(f"[DEBUG] angle sum fails for {p.cells}: {stats}")
        else:
            report.angle_sum_excluded += 1

        if common_edges(p) != 2 * n - stats.cycle_len // 2 - 2:
            report.edge_count_failures += 1
            logger.debug(f"[DEBUG] edge count fails for {p.cells}: {stats}")

        largest[stats.cycle_len] = max(largest.get(stats.cycle_len, 0), n)

        if perimeter(p) == min_perimeter(n):
            report.extremal_checked += 1
            if stats.cycle_len != min_perimeter(n) - 4:
                report.extremal_cycle_failures += 1

    attained = set()
    failed = set()
    for cycle_len, order in sorted(largest.items()):
        bound = max_area_for_boundary(cycle_len)
        if order > bound or (bound <= n_max and order != bound):
            failed.add(cycle_len)
        elif order == bound:
            attained.add(cycle_len)

    # lengths whose bound lies past the corpus: the extremal rectangle attains it
    for cycle_len in range(4, AREA_BOUND_MAX + 1, 2):
        if rectangle_boundary_attains(cycle_len):
            attained.add(cycle_len)
        else:
            failed.add(cycle_len)

    report.area_bound_failures = sorted(failed)
    report.area_bound_attained = sorted(attained - failed)

    if report.ok:
        logger.info(f"[OK] Lemma checks pass for n <= {n_max}: {report.summary()}")
    else:
        logger.warning(f"[WARN] Lemma checks failed for n <= {n_max}: {report.summary()}")
    return report


def rectangle_boundary_attains(cycle_len: int) -> bool:
    """Does the ceil((L+4)/4) x floor((L+4)/4) rectangle have walk length L and area A(L)?"""
    half_perimeter = cycle_len + 4
    rows, cols = half_perimeter // 4, -(-half_perimeter // 4)
    rect = Polyomino.rectangle(rows, cols)
    stats = boundary_stats(rect)
    return stats.cycle_len == cycle_len and stats.h1 == 0 and rect.order == max_area_for_boundary(cycle_len)


# ---------------------------------------------------------------------------
# Formula vs brute force, per order
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrderComparison:
    n: int
    formula: Tuple[int, int, int]  # p, B, e
    brute_force: Tuple[int, int, int]
    shape_sets_match: bool

    @property
    def agrees(self) -> bool:
        return self.formula == self.brute_force and self.shape_sets_match


def compare_order(n: int, cap: int = ORACLE_CAP) -> OrderComparison:
    best, count = extremal_by_brute_force(n, cap)
    constructed = enumerate_extremal(n)
    return OrderComparison(
        n=n,
        formula=(min_perimeter(n), max_common_edges(n), count_extremal(n)),
        brute_force=(best, max_common_edges_oracle(n, cap), count),
        shape_sets_match=constructed == extremal_shapes_by_brute_force(n, cap),
    )

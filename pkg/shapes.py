"""
File: shapes.py
Created: 2026-10-19
Purpose: Build every minimum-perimeter polyomino of order n by deleting Ferrers-diagram
         shaped corners from the candidate rectangles (counting.candidate_rectangles),
         deduplicate under the 8 symmetries of the square grid, and render the results.
         Also the spiral construction, perimeter/common-edge counts and canonical forms
         that oracle.py reuses.
Input: order n (enumeration capped at SHAPES_CAP), or Polyomino values
Output: canonical Polyomino sets, ascii / svg text

Coordinates are (row, col); a rectangle candidate a x b is laid out with b rows and
a columns. Corners are numbered 1 (top left), 2 (top right), 3 (bottom right),
4 (bottom left). A corner partition lists row lengths, starting at the row on the
rectangle's edge and moving inward.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, FrozenSet, Iterable, Iterator, List, Optional, Set, Tuple

import numpy as np
from tqdm import tqdm

from counting import RectangleCandidate, candidate_rectangles

logger = logging.getLogger(__name__)

# Configuration
SHAPES_CAP = 400  # enumeration grows fast; counting has no cap
SVG_UNIT = 20     # px per cell
SVG_FILL = "#9ecae1"
SVG_STROKE = "#08306b"

Cell = Tuple[int, int]
Partition = Tuple[int, ...]
CornerTuple = Tuple[Partition, Partition, Partition, Partition]


class OverlapError(ValueError):
    """Two corner diagrams of a deletion scheme claim the same cell."""


class CapExceededError(ValueError):
    """An exhaustive enumeration was asked for an order beyond its configured cap."""

    def __init__(self, n: int, cap: int, what: str = "enumeration"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} of order {n} exceeds the cap {cap} (raise it with --cap)")


# ---------------------------------------------------------------------------
# Polyomino
# ---------------------------------------------------------------------------

def normalize_cells(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    """Translate so min row = min col = 0 and sort by (row, col)."""
    cells = list(cells)
    if not cells:
        raise ValueError("a polyomino needs at least one cell")
    min_r = min(r for r, _ in cells)
    min_c = min(c for _, c in cells)
    return tuple(sorted(set((r - min_r, c - min_c) for r, c in cells)))


@dataclass(frozen=True, order=True)
class Polyomino:
    """Normalized cell set, stored sorted so that ordering is the canonical-form order."""

    cells: Tuple[Cell, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", normalize_cells(self.cells))

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "Polyomino":
        return cls(tuple(cells))

    @classmethod
    def rectangle(cls, rows: int, cols: int) -> "Polyomino":
        return cls(tuple(itertools.product(range(rows), range(cols))))

    @property
    def order(self) -> int:
        return len(self.cells)

    @property
    def cell_set(self) -> FrozenSet[Cell]:
        return frozenset(self.cells)

    def __len__(self) -> int:
        return len(self.cells)


def bounding_box(p: Polyomino) -> Tuple[int, int]:
    """(height, width) of the smallest surrounding rectangle."""
    return (max(r for r, _ in p.cells) + 1, max(c for _, c in p.cells) + 1)


def common_edges(p: Polyomino) -> int:
    """Number of unordered pairs of edge-adjacent cells."""
    cells = p.cell_set
    return sum(((r + 1, c) in cells) + ((r, c + 1) in cells) for r, c in p.cells)


def perimeter(p: Polyomino) -> int:
    return 4 * p.order - 2 * common_edges(p)


def neighbours(cell: Cell) -> Tuple[Cell, Cell, Cell, Cell]:
    r, c = cell
    return ((r - 1, c), (r, c + 1), (r + 1, c), (r, c - 1))


def is_connected(cells: Iterable[Cell]) -> bool:
    cells = set(cells)
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    queue = deque([start])
    while queue:
        for nb in neighbours(queue.popleft()):
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return len(seen) == len(cells)


# ---------------------------------------------------------------------------
# Symmetry and canonical form
# ---------------------------------------------------------------------------

_SYMMETRIES: Tuple[Callable[[int, int], Cell], ...] = (
    lambda r, c: (r, c),
    lambda r, c: (c, -r),
    lambda r, c: (-r, -c),
    lambda r, c: (-c, r),
    lambda r, c: (r, -c),
    lambda r, c: (-r, c),
    lambda r, c: (c, r),
    lambda r, c: (-c, -r),
)


def _image_keys(cells: Iterable[Cell]) -> List[Tuple[Cell, ...]]:
    pts = tuple(cells)
    keys = []
    for move in _SYMMETRIES:
        moved = [move(r, c) for r, c in pts]
        min_r = min(r for r, _ in moved)
        min_c = min(c for _, c in moved)
        keys.append(tuple(sorted((r - min_r, c - min_c) for r, c in moved)))
    return keys


def canonical_key(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    """Sorted cell tuple of the lexicographically smallest of the 8 images."""
    return min(_image_keys(cells))


def images(p: Polyomino) -> Tuple[Polyomino, ...]:
    """The 8 images of p under rotations and reflections (duplicates kept)."""
    return tuple(Polyomino(key) for key in _image_keys(p.cells))


def canonical_form(p: Polyomino) -> Polyomino:
    return Polyomino(canonical_key(p.cells))


# ---------------------------------------------------------------------------
# Spiral construction
# ---------------------------------------------------------------------------

def iter_spiral_cells() -> Iterator[Cell]:
    """Cells in square-spiral order: right 1, down 1, left 2, up 2, right 3, ..."""
    r = c = 0
    yield (r, c)
    directions = ((0, 1), (1, 0), (0, -1), (-1, 0))
    heading = 0
    step = 1
    while True:
        for _ in range(2):
            dr, dc = directions[heading % 4]
            for _ in range(step):
                r, c = r + dr, c + dc
                yield (r, c)
            heading += 1
        step += 1


def spiral(n: int) -> Polyomino:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Polyomino(tuple(itertools.islice(iter_spiral_cells(), n)))


def spiral_perimeters(n_max: int) -> List[int]:
    """Perimeter of spiral(n) for n = 1..n_max, updated incrementally."""
    placed: Set[Cell] = set()
    out = []
    current = 0
    for cell in itertools.islice(iter_spiral_cells(), n_max):
        touching = sum(nb in placed for nb in neighbours(cell))
        current += 4 - 2 * touching
        placed.add(cell)
        out.append(current)
    return out


# ---------------------------------------------------------------------------
# Corner deletions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _conjugate(parts: Partition) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


@dataclass(frozen=True)
class CornerDeletion:
    """Ferrers diagram of cells removed at one rectangle corner."""

    partition: Partition = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.partition)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "partition", parts)

    @property
    def size(self) -> int:
        return sum(self.partition)

    @property
    def height(self) -> int:
        return len(self.partition)

    @property
    def width(self) -> int:
        return self.partition[0] if self.partition else 0

    def conjugate(self) -> "CornerDeletion":
        return CornerDeletion(_conjugate(self.partition))

    def durfee_size(self) -> int:
        """Side of the largest square fitting in the diagram's corner."""
        return sum(1 for i, p in enumerate(self.partition) if p > i)

    @property
    def is_self_conjugate(self) -> bool:
        return _conjugate(self.partition) == self.partition


@dataclass(frozen=True)
class DeletionScheme:
    rect: RectangleCandidate
    corners: Tuple[CornerDeletion, CornerDeletion, CornerDeletion, CornerDeletion] = field(
        default=(CornerDeletion(), CornerDeletion(), CornerDeletion(), CornerDeletion())
    )

    def __post_init__(self):
        corners = tuple(
            c if isinstance(c, CornerDeletion) else CornerDeletion(tuple(c)) for c in self.corners
        )
        if len(corners) != 4:
            raise ValueError(f"a deletion scheme has exactly 4 corners, got {len(corners)}")
        object.__setattr__(self, "corners", corners)
        if self.total != self.rect.surplus:
            raise ValueError(f"scheme deletes {self.total} cells, rectangle surplus is {self.rect.surplus}")
        for label, corner in enumerate(corners, 1):
            if corner.height > self.rect.b - 1 or corner.width > self.rect.a - 1:
                raise ValueError(
                    f"corner {label} diagram {corner.partition} does not fit a {self.rect.a}x{self.rect.b} rectangle"
                )

    @property
    def total(self) -> int:
        return sum(c.size for c in self.corners)

    @property
    def partitions(self) -> CornerTuple:
        return tuple(c.partition for c in self.corners)


def _corner_cells(parts: Partition, label: int, rows: int, cols: int) -> Iterator[Cell]:
    for i, length in enumerate(parts):
        for j in range(length):
            if label == 1:
                yield (i, j)
            elif label == 2:
                yield (i, cols - 1 - j)
            elif label == 3:
                yield (rows - 1 - i, cols - 1 - j)
            else:
                yield (rows - 1 - i, j)


def _deleted_cells(corners: CornerTuple, rows: int, cols: int) -> Set[Cell]:
    deleted: Set[Cell] = set()
    for label, parts in enumerate(corners, 1):
        for cell in _corner_cells(parts, label, rows, cols):
            if cell in deleted:
                raise OverlapError(f"corner {label} overlaps another corner at cell {cell}")
            deleted.add(cell)
    return deleted


def apply_scheme(scheme: DeletionScheme) -> Polyomino:
    """The rectangle (b rows, a columns) minus the four corner diagrams."""
    rows, cols = scheme.rect.b, scheme.rect.a
    deleted = _deleted_cells(scheme.partitions, rows, cols)
    kept = [cell for cell in itertools.product(range(rows), range(cols)) if cell not in deleted]
    return Polyomino(tuple(kept))


@lru_cache(maxsize=None)
def _partitions(total: int, max_parts: int, max_part: int) -> Tuple[Partition, ...]:
    if total == 0:
        return ((),)
    if max_parts == 0:
        return ()
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, max_parts - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def iter_partitions(total: int, max_parts: int, max_part: int) -> Iterator[Partition]:
    """Partitions of `total` with at most `max_parts` parts, each at most `max_part`."""
    return iter(_partitions(total, max_parts, max_part))


def iter_compositions(total: int, parts: int = 4) -> Iterator[Tuple[int, ...]]:
    """Ordered ways to write `total` as `parts` non-negative integers."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in iter_compositions(total - head, parts - 1):
            yield (head,) + tail


def _iter_corner_tuples(rect: RectangleCandidate) -> Iterator[CornerTuple]:
    max_parts, max_part = rect.b - 1, rect.a - 1
    for sizes in iter_compositions(rect.surplus, 4):
        choices = [_partitions(d, max_parts, max_part) for d in sizes]
        yield from itertools.product(*choices)


def iter_schemes(rect: RectangleCandidate) -> Iterator[DeletionScheme]:
    for corners in _iter_corner_tuples(rect):
        yield DeletionScheme(rect, tuple(CornerDeletion(p) for p in corners))


# The rectangle's symmetries permute corners and keep row lengths; the square adds the
# diagonal mirror, which also swaps rows with columns (conjugation).
_RECTANGLE_MOVES: Tuple[Callable[[CornerTuple], CornerTuple], ...] = (
    lambda q: q,
    lambda q: (q[1], q[0], q[3], q[2]),
    lambda q: (q[3], q[2], q[1], q[0]),
    lambda q: (q[2], q[3], q[0], q[1]),
)


def _transpose(q: CornerTuple) -> CornerTuple:
    return (_conjugate(q[0]), _conjugate(q[3]), _conjugate(q[2]), _conjugate(q[1]))


def scheme_orbit_key(corners: CornerTuple, is_square: bool) -> CornerTuple:
    """Smallest image of a corner quadruple under the rectangle's (or square's) symmetries."""
    keys = [move(corners) for move in _RECTANGLE_MOVES]
    if is_square:
        flipped = _transpose(corners)
        keys.extend(move(flipped) for move in _RECTANGLE_MOVES)
    return min(keys)


def is_orbit_representative(corners: CornerTuple, is_square: bool) -> bool:
    """corners == scheme_orbit_key(corners, is_square), without building every image."""
    q1, q2, q3, q4 = corners
    if (q2, q1, q4, q3) < corners or (q4, q3, q2, q1) < corners or (q3, q4, q1, q2) < corners:
        return False
    if is_square:
        t1, t2, t3, t4 = _transpose(corners)
        for image in ((t1, t2, t3, t4), (t2, t1, t4, t3), (t4, t3, t2, t1), (t3, t4, t1, t2)):
            if image < corners:
                return False
    return True


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtremalEnumeration:
    n: int
    shapes: Tuple[Polyomino, ...]  # canonical forms, sorted
    schemes_tried: int
    orbit_representatives: int
    canonical_collisions: int  # orbit representatives that canonicalized onto an earlier shape
    cell_collisions: Optional[int]  # distinct schemes giving identical cells in one rectangle

    @property
    def count(self) -> int:
        return len(self.shapes)


def enumerate_extremal_report(
    n: int,
    cap: int = SHAPES_CAP,
    track_cell_collisions: bool = False,
    progress: bool = False,
) -> ExtremalEnumeration:
    """Run the deletion process for every candidate rectangle and collect statistics."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceededError(n, cap, "extremal enumeration")

    shapes: Set[Polyomino] = set()
    tried = representatives = canonical_collisions = 0
    cell_collisions = 0 if track_cell_collisions else None

    rects = candidate_rectangles(n)
    logger.info(f"[START] Enumerating n={n} over {len(rects)} candidate rectangle(s)")
    for rect in tqdm(rects, desc=f"Rectangles (n={n})", disable=not progress):
        seen_cells: Set[Polyomino] = set()
        for corners in _iter_corner_tuples(rect):
            tried += 1
            if track_cell_collisions:
                raw = apply_scheme(DeletionScheme(rect, corners))
                if raw in seen_cells:
                    cell_collisions += 1
                seen_cells.add(raw)
            if not is_orbit_representative(corners, rect.is_square):
                continue
            representatives += 1
            shape = canonical_form(apply_scheme(DeletionScheme(rect, corners)))
            if shape in shapes:
                canonical_collisions += 1
            shapes.add(shape)

    logger.info(f"[OK] n={n}: {len(shapes)} shapes from {tried} schemes")
    return ExtremalEnumeration(
        n=n,
        shapes=tuple(sorted(shapes)),
        schemes_tried=tried,
        orbit_representatives=representatives,
        canonical_collisions=canonical_collisions,
        cell_collisions=cell_collisions,
    )


def enumerate_extremal(n: int, cap: int = SHAPES_CAP) -> FrozenSet[Polyomino]:
    """All free polyominoes of order n with perimeter p(n), as canonical forms."""
    return frozenset(enumerate_extremal_report(n, cap=cap).shapes)


def count_extremal_by_construction(n: int) -> int:
    """Number of scheme orbits over all candidate rectangles, without building cells."""
    total = 0
    for rect in candidate_rectangles(n):
        for corners in _iter_corner_tuples(rect):
            if is_orbit_representative(corners, rect.is_square):
                total += 1
    return total


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _grid(p: Polyomino) -> np.ndarray:
    height, width = bounding_box(p)
    grid = np.zeros((height, width), dtype=bool)
    rows, cols = zip(*p.cells)
    grid[list(rows), list(cols)] = True
    return grid


def render_ascii(p: Polyomino) -> str:
    grid = _grid(p)
    return "\n".join("".join("#" if filled else "." for filled in row) for row in grid)


def _boundary_segments(p: Polyomino) -> List[Tuple[int, int, int, int]]:
    """Unit edges (x1, y1, x2, y2) in grid units between a cell and an empty square."""
    cells = p.cell_set
    segments = []
    for r, c in p.cells:
        if (r - 1, c) not in cells:
            segments.append((c, r, c + 1, r))
        if (r, c + 1) not in cells:
            segments.append((c + 1, r, c + 1, r + 1))
        if (r + 1, c) not in cells:
            segments.append((c, r + 1, c + 1, r + 1))
        if (r, c - 1) not in cells:
            segments.append((c, r, c, r + 1))
    return segments


def render_svg(p: Polyomino, unit: int = SVG_UNIT) -> str:
    height, width = bounding_box(p)
    w, h = width * unit, height * unit
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">'
    ]
    for r, c in p.cells:
        lines.append(
            f'  <rect x="{c * unit}" y="{r * unit}" width="{unit}" height="{unit}" '
            f'fill="{SVG_FILL}" stroke="#ffffff" stroke-width="1"/>'
        )
    path = " ".join(
        f"M {x1 * unit} {y1 * unit} L {x2 * unit} {y2 * unit}" for x1, y1, x2, y2 in _boundary_segments(p)
    )
    lines.append(f'  <path d="{path}" fill="none" stroke="{SVG_STROKE}" stroke-width="2"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


RENDER_FORMATS = {"ascii": render_ascii, "svg": render_svg}
FILE_EXTENSIONS = {"ascii": "txt", "svg": "svg"}


def render(p: Polyomino, fmt: str = "ascii") -> str:
    try:
        renderer = RENDER_FORMATS[fmt]
    except KeyError:
        raise ValueError(f"unknown render format {fmt!r}; choose from {sorted(RENDER_FORMATS)}") from None
    return renderer(p)

"""Quarter-square triangle lattice.

Every unit square (x, y) is split by its two diagonals into four triangles
tagged N, E, S, W. These triangles (``TriCell``) are the atoms everything
else is built from: a tangram of seven pieces covers exactly 32 of them.

Points are half-integers throughout. They are stored doubled, as plain
ints, so all geometric predicates are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence


class Quadrant(IntEnum):
    N = 0
    E = 1
    S = 2
    W = 3


class TriCell(NamedTuple):
    x: int
    y: int
    q: Quadrant

    def __repr__(self) -> str:
        return f"({self.x},{self.y},{self.q.name})"


def cell(x: int, y: int, q: str | int | Quadrant) -> TriCell:
    """Build a TriCell, accepting the quadrant as a name or an int."""
    if isinstance(q, str):
        q = Quadrant[q]
    return TriCell(x, y, Quadrant(q))


def corners2(c: TriCell) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    """Doubled coordinates of the triangle's vertices, counterclockwise."""
    x, y = 2 * c.x, 2 * c.y
    ctr = (x + 1, y + 1)
    if c.q is Quadrant.N:
        return (x + 2, y + 2), (x, y + 2), ctr
    if c.q is Quadrant.E:
        return (x + 2, y), (x + 2, y + 2), ctr
    if c.q is Quadrant.S:
        return (x, y), (x + 2, y), ctr
    return (x, y + 2), (x, y), ctr


def centroid6(c: TriCell) -> tuple[int, int]:
    """Centroid in units of 1/6, so it stays integral."""
    pts = corners2(c)
    return sum(p[0] for p in pts), sum(p[1] for p in pts)


def locate6(px: int, py: int) -> TriCell:
    """Return the TriCell containing the interior point (px/6, py/6)."""
    x, rx = divmod(px, 6)
    y, ry = divmod(py, 6)
    # rx, ry are the offsets inside the square, in sixths
    above_main = ry > rx
    above_anti = rx + ry > 6
    if rx == ry or rx + ry == 6 or rx == 0 or ry == 0:
        raise ValueError(f"point ({px}/6, {py}/6) lies on a lattice line")
    if above_main and above_anti:
        q = Quadrant.N
    elif above_main:
        q = Quadrant.W
    elif above_anti:
        q = Quadrant.E
    else:
        q = Quadrant.S
    return TriCell(x, y, q)


# ---------------------------------------------------------------------------
# Transforms

@dataclass(frozen=True, order=True)
class Transform:
    """Rigid lattice map: mirror (x -> -x), then rotate by rot*90 deg ccw, then translate."""

    rot: int = 0
    mirror: bool = False
    dx: int = 0
    dy: int = 0

    def __post_init__(self):
        if self.rot not in (0, 1, 2, 3):
            raise ValueError(f"rot must be in 0..3, got {self.rot}")

    @property
    def linear(self) -> "Transform":
        return Transform(self.rot, self.mirror)

    def point2(self, px: int, py: int) -> tuple[int, int]:
        """Map a doubled point. Translation is in whole lattice units."""
        if self.mirror:
            px = -px
        for _ in range(self.rot):
            px, py = -py, px
        return px + 2 * self.dx, py + 2 * self.dy

    def then(self, other: "Transform") -> "Transform":
        """The transform ``other ∘ self`` (apply self first)."""
        return compose(other, self)

    def inverse(self) -> "Transform":
        lin = Transform((-self.rot) % 4 if not self.mirror else self.rot, self.mirror)
        # lin undoes the linear part; fix up the translation
        tx, ty = lin.point2(2 * self.dx, 2 * self.dy)
        return Transform(lin.rot, lin.mirror, -tx // 2, -ty // 2)


IDENTITY = Transform()

# Tables for the linear part acting on a cell. Hand-written; checked against the
# centroid mapping in the tests.
_ROT_QUAD = {Quadrant.N: Quadrant.W, Quadrant.W: Quadrant.S,
             Quadrant.S: Quadrant.E, Quadrant.E: Quadrant.N}
_MIRROR_QUAD = {Quadrant.N: Quadrant.N, Quadrant.S: Quadrant.S,
                Quadrant.E: Quadrant.W, Quadrant.W: Quadrant.E}


def point_group(allow_reflection: bool = True) -> list[Transform]:
    """The 8 (or 4 rotation-only) elements of D4, translation zero."""
    mirrors = (False, True) if allow_reflection else (False,)
    return [Transform(r, m) for m in mirrors for r in range(4)]


def compose(g: Transform, h: Transform) -> Transform:
    """Return g ∘ h."""
    # R^a M^s ∘ R^b M^t, using M R^b = R^-b M
    if g.mirror:
        rot = (g.rot - h.rot) % 4
    else:
        rot = (g.rot + h.rot) % 4
    mirror = g.mirror != h.mirror
    tx, ty = g.point2(2 * h.dx, 2 * h.dy)
    return Transform(rot, mirror, tx // 2, ty // 2)


def apply_transform(t: Transform, c: TriCell) -> TriCell:
    x, y, q = c
    if t.mirror:
        x, q = -x - 1, _MIRROR_QUAD[q]
    for _ in range(t.rot):
        x, y, q = -y - 1, x, _ROT_QUAD[q]
    return TriCell(x + t.dx, y + t.dy, q)


def transform_cells(t: Transform, cells: Iterable[TriCell]) -> frozenset[TriCell]:
    return frozenset(apply_transform(t, c) for c in cells)


def normalize(cells: Iterable[TriCell]) -> frozenset[TriCell]:
    """Translate cells so the bounding box starts at (0, 0)."""
    cells = list(cells)
    mx = min(c.x for c in cells)
    my = min(c.y for c in cells)
    return frozenset(TriCell(c.x - mx, c.y - my, c.q) for c in cells)


# ---------------------------------------------------------------------------
# Polygons

def _as_double(v) -> int:
    f = Fraction(v) * 2
    if f.denominator != 1:
        raise ValueError(f"coordinate {v} is not a multiple of 1/2")
    return int(f)


def _check_edge(a: tuple[int, int], b: tuple[int, int]) -> None:
    (ax, ay), (bx, by) = a, b
    dx, dy = bx - ax, by - ay
    if dx == 0 and dy == 0:
        raise ValueError(f"degenerate edge at {a}")
    if dx == 0:
        ok = ax % 2 == 0
    elif dy == 0:
        ok = ay % 2 == 0
    elif dx == dy:
        ok = (ay - ax) % 2 == 0
    elif dx == -dy:
        ok = (ax + ay) % 2 == 0
    else:
        raise ValueError(f"edge {a}->{b} (doubled) is not a multiple of 45 degrees")
    if not ok:
        raise ValueError(f"edge {a}->{b} (doubled) does not lie on a lattice line")


def polygon_area2(pts: Sequence[tuple[int, int]]) -> int:
    """Twice the signed area, for doubled coordinates (so 8x the true area)."""
    s = 0
    for i, (x0, y0) in enumerate(pts):
        x1, y1 = pts[(i + 1) % len(pts)]
        s += x0 * y1 - x1 * y0
    return s


def _inside6(pts6: Sequence[tuple[int, int]], px: int, py: int) -> bool:
    # crossing number; the probe never lies on an edge for lattice polygons
    inside = False
    n = len(pts6)
    for i in range(n):
        x0, y0 = pts6[i]
        x1, y1 = pts6[(i + 1) % n]
        if (y0 > py) != (y1 > py):
            # x-coordinate of the crossing compared without division
            lhs = (px - x0) * (y1 - y0)
            rhs = (x1 - x0) * (py - y0)
            if (y1 - y0 > 0 and lhs < rhs) or (y1 - y0 < 0 and lhs > rhs):
                inside = not inside
    return inside


def rasterize_polygon(vertices: Sequence[tuple]) -> frozenset[TriCell]:
    """Return the TriCells whose centroids lie inside a lattice polygon.

    ``vertices`` are (x, y) pairs with half-integer coordinates, given
    counterclockwise. Every edge must run along a lattice line.
    """
    pts = [(_as_double(x), _as_double(y)) for x, y in vertices]
    if len(pts) < 3:
        raise ValueError("polygon needs at least 3 vertices")
    for i in range(len(pts)):
        _check_edge(pts[i], pts[(i + 1) % len(pts)])
    area8 = polygon_area2(pts)
    if area8 <= 0:
        raise ValueError("polygon must be positively oriented")
    pts6 = [(3 * x, 3 * y) for x, y in pts]
    xs = [p[0] // 2 for p in pts]
    ys = [p[1] // 2 for p in pts]
    out = []
    for y in range(min(ys) - 1, max(ys) + 1):
        for x in range(min(xs) - 1, max(xs) + 1):
            for q in Quadrant:
                c = TriCell(x, y, q)
                if _inside6(pts6, *centroid6(c)):
                    out.append(c)
    cells = frozenset(out)
    # each cell has area 1/4; area8 is 8 * area
    if 2 * len(cells) != area8:
        raise ValueError("polygon is not a union of lattice cells")
    return cells


# ---------------------------------------------------------------------------
# Regions

@dataclass(frozen=True)
class Bounds:
    x0: int
    y0: int
    width: int
    height: int

    @classmethod
    def of(cls, cells: Iterable[TriCell]) -> "Bounds":
        cells = list(cells)
        x0 = min(c.x for c in cells)
        y0 = min(c.y for c in cells)
        return cls(x0, y0, max(c.x for c in cells) - x0 + 1,
                   max(c.y for c in cells) - y0 + 1)

    @property
    def size(self) -> int:
        return 4 * self.width * self.height

    def contains(self, c: TriCell) -> bool:
        return (self.x0 <= c.x < self.x0 + self.width
                and self.y0 <= c.y < self.y0 + self.height)


def cell_index(c: TriCell, bounds: Bounds) -> int:
    """Row-major index (y, then x, then quadrant N,E,S,W)."""
    if not bounds.contains(c):
        raise IndexError(f"{c!r} lies outside {bounds}")
    return ((c.y - bounds.y0) * bounds.width + (c.x - bounds.x0)) * 4 + int(c.q)


def cell_at(index: int, bounds: Bounds) -> TriCell:
    if not 0 <= index < bounds.size:
        raise IndexError(f"index {index} outside {bounds}")
    sq, q = divmod(index, 4)
    row, col = divmod(sq, bounds.width)
    return TriCell(bounds.x0 + col, bounds.y0 + row, Quadrant(q))


def region_symmetries(cells: Iterable[TriCell]) -> list[Transform]:
    """All congruences mapping the cell set onto itself, identity first."""
    cells = frozenset(cells)
    if not cells:
        raise ValueError("empty cell set")
    b = Bounds.of(cells)
    out = []
    for g in point_group():
        img = transform_cells(g, cells)
        gb = Bounds.of(img)
        t = Transform(g.rot, g.mirror, b.x0 - gb.x0, b.y0 - gb.y0)
        if transform_cells(t, cells) == cells:
            out.append(t)
    return out


def edge_neighbors(c: TriCell) -> list[TriCell]:
    """The three cells sharing an edge with c."""
    x, y, q = c
    same = [TriCell(x, y, Quadrant((q + 1) % 4)), TriCell(x, y, Quadrant((q + 3) % 4))]
    across = {
        Quadrant.N: TriCell(x, y + 1, Quadrant.S),
        Quadrant.S: TriCell(x, y - 1, Quadrant.N),
        Quadrant.E: TriCell(x + 1, y, Quadrant.W),
        Quadrant.W: TriCell(x - 1, y, Quadrant.E),
    }[q]
    return same + [across]


def is_connected(cells: Iterable[TriCell]) -> bool:
    cells = set(cells)
    if not cells:
        return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        for n in edge_neighbors(stack.pop()):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(cells)


@dataclass(frozen=True)
class Region:
    """A target shape: a finite set of cells plus its symmetry group."""

    cells: frozenset[TriCell]
    name: str | None = None
    symmetries: tuple[Transform, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.cells:
            raise ValueError("region must be nonempty")
        object.__setattr__(self, "cells", frozenset(self.cells))
        if not self.symmetries:
            object.__setattr__(self, "symmetries", tuple(region_symmetries(self.cells)))

    @classmethod
    def from_polygon(cls, vertices: Sequence[tuple], name: str | None = None) -> "Region":
        return cls(rasterize_polygon(vertices), name)

    @property
    def bounds(self) -> Bounds:
        return Bounds.of(self.cells)

    @property
    def area_ts(self) -> int:
        return len(self.cells)

    def mask(self) -> int:
        b = self.bounds
        m = 0
        for c in self.cells:
            m |= 1 << cell_index(c, b)
        return m

"""Canonical forms for regions and solutions.

Key formats (stable, used in the shape-numbering file and golden tests):

Region key
    ``"<W>x<H>:<digits>"``. The region is normalized to start at (0, 0);
    one hex digit per unit square in row-major order (y, then x), bit
    values N=1, E=2, S=4, W=8. The key is the byte-wise smallest such
    string over the 8 point-group images of the region.

Solution key
    ``"<name>:<i>,<i>,...;<name>:..."``. One entry per placed piece, the
    piece name followed by its ascending cell indices (row-major over the
    region's bounding box, see :func:`trigrid.cell_index`). Entries are
    ordered by piece name (Ts, S, P, Tm, Tb, Tr, Tz), then by cell list.
    In colored mode the name carries the instance id, ``Tm#1``. The key is
    the byte-wise smallest serialization over the region's symmetries.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .trigrid import (
    Bounds,
    Quadrant,
    Region,
    TriCell,
    cell_index,
    point_group,
    transform_cells,
)

TAN_ORDER = ("Ts", "S", "P", "Tm", "Tb", "Tr", "Tz")
_RANK = {name: i for i, name in enumerate(TAN_ORDER)}


def _raster(cells: frozenset[TriCell]) -> str:
    b = Bounds.of(cells)
    digits = []
    for y in range(b.y0, b.y0 + b.height):
        for x in range(b.x0, b.x0 + b.width):
            v = 0
            for q in range(4):
                if TriCell(x, y, Quadrant(q)) in cells:
                    v |= 1 << q
            digits.append(format(v, "x"))
    return f"{b.width}x{b.height}:{''.join(digits)}"


def region_key(cells: Iterable[TriCell]) -> str:
    cells = frozenset(cells)
    return min(_raster(transform_cells(g, cells)) for g in point_group())


def congruent(a: Iterable[TriCell], b: Iterable[TriCell]) -> bool:
    return region_key(a) == region_key(b)


def region_from_key(key: str, name: str | None = None) -> Region:
    """Inverse of :func:`region_key` (returns the normalized raster)."""
    try:
        dims, digits = key.split(":")
        w, h = (int(v) for v in dims.split("x"))
    except ValueError:
        raise ValueError(f"malformed region key {key!r}") from None
    if len(digits) != w * h:
        raise ValueError(f"region key {key!r} has {len(digits)} digits, expected {w * h}")
    cells = set()
    for i, d in enumerate(digits):
        y, x = divmod(i, w)
        v = int(d, 16)
        for q in range(4):
            if v >> q & 1:
                cells.add(TriCell(x, y, Quadrant(q)))
    return Region(frozenset(cells), name)


# ---------------------------------------------------------------------------
# Solutions

@dataclass(frozen=True)
class Placement:
    """One placed piece. ``instance`` numbers copies of the same piece from 1."""

    name: str
    cells: frozenset[TriCell]
    instance: int = 1

    @property
    def label(self) -> str:
        return f"{self.name}#{self.instance}"


@dataclass(frozen=True)
class Solution:
    placements: tuple[Placement, ...]

    def names(self) -> Counter:
        return Counter(p.name for p in self.placements)

    def cells(self) -> frozenset[TriCell]:
        return frozenset().union(*(p.cells for p in self.placements))

    def transformed(self, g) -> "Solution":
        return Solution(tuple(
            Placement(p.name, transform_cells(g, p.cells), p.instance)
            for p in self.placements))

    def swapped(self, name: str) -> "Solution":
        """Exchange the instance ids of the two copies of ``name``."""
        ids = sorted(p.instance for p in self.placements if p.name == name)
        if len(ids) != 2:
            raise ValueError(f"solution has {len(ids)} copies of {name}, need 2")
        swap = {ids[0]: ids[1], ids[1]: ids[0]}
        return Solution(tuple(
            Placement(p.name, p.cells, swap[p.instance]) if p.name == name else p
            for p in self.placements))


class InvalidSolution(ValueError):
    pass


def validate(sol: Solution, region: Region, tans: Counter | None = None) -> None:
    """Raise InvalidSolution unless sol is a disjoint exact cover of region."""
    seen: set[TriCell] = set()
    for p in sol.placements:
        if seen & p.cells:
            raise InvalidSolution(f"{p.label} overlaps an earlier piece")
        seen |= p.cells
    if seen != region.cells:
        missing = len(region.cells - seen)
        extra = len(seen - region.cells)
        raise InvalidSolution(f"cover mismatch: {missing} cells uncovered, {extra} outside")
    if tans is not None and sol.names() != Counter(tans):
        raise InvalidSolution(f"piece multiset {dict(sol.names())} != {dict(tans)}")


def serialize(sol: Solution, bounds: Bounds, colored: bool = False) -> str:
    entries = []
    for p in sol.placements:
        idx = sorted(cell_index(c, bounds) for c in p.cells)
        entries.append((_RANK[p.name], p.instance if colored else 0, idx, p))
    entries.sort(key=lambda e: (e[0], e[1], e[2]))
    parts = []
    for _, _, idx, p in entries:
        name = p.label if colored else p.name
        parts.append(name + ":" + ",".join(map(str, idx)))
    return ";".join(parts)


def solution_key(sol: Solution, region: Region, colored: bool = False) -> str:
    b = region.bounds
    return min(serialize(sol.transformed(g), b, colored) for g in region.symmetries)


@dataclass(frozen=True)
class CanonicalSolution:
    key: str
    representative: Solution
    orbit_size: int


def _identical_pairs(sol: Solution) -> list[str]:
    return [n for n, k in sorted(sol.names().items(), key=lambda kv: _RANK[kv[0]]) if k == 2]


def _labeled_orbit(sol: Solution, region: Region) -> set[str]:
    """Colored serializations reachable by symmetries and same-name swaps."""
    b = region.bounds
    variants = [sol]
    for name in _identical_pairs(sol):
        variants += [v.swapped(name) for v in variants]
    return {serialize(v.transformed(g), b, colored=True)
            for v in variants for g in region.symmetries}


def canonicalize(sol: Solution, region: Region) -> CanonicalSolution:
    validate(sol, region)
    return CanonicalSolution(solution_key(sol, region), sol, len(_labeled_orbit(sol, region)))


def dedupe(solutions: Iterable[Solution], region: Region) -> list[CanonicalSolution]:
    """One entry per essentially different partition, sorted by key."""
    seen: dict[str, Solution] = {}
    for sol in solutions:
        k = solution_key(sol, region)
        if k not in seen:
            seen[k] = sol
    return [canonicalize(seen[k], region) for k in sorted(seen)]


def colored_count(canonicals: Sequence[CanonicalSolution], region: Region) -> int:
    """Count partitions when copies of the same piece are told apart.

    For each monochrome partition, the colorings of its identical pairs are
    counted up to the symmetries that fix the partition.
    """
    total = 0
    for cs in canonicals:
        sol = cs.representative
        pairs = _identical_pairs(sol)
        colorings = [sol]
        for name in pairs:
            colorings += [v.swapped(name) for v in colorings]
        total += len({solution_key(v, region, colored=True) for v in colorings})
    return total


def align_to(cells: Iterable[TriCell], region: Region):
    """Return a congruence mapping ``cells`` onto ``region.cells``, or None."""
    from .trigrid import Transform

    cells = frozenset(cells)
    rb = region.bounds
    for g in point_group():
        gb = Bounds.of(transform_cells(g, cells))
        t = Transform(g.rot, g.mirror, rb.x0 - gb.x0, rb.y0 - gb.y0)
        if transform_cells(t, cells) == region.cells:
            return t
    return None

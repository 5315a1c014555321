"""Tan sets and the census of convex target shapes."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from importlib import resources
from itertools import product
from pathlib import Path

from .canon import TAN_ORDER, region_key
from .trigrid import Region, TriCell, rasterize_polygon

TANGRAM_AREA_TS = 32


@dataclass(frozen=True)
class Tan:
    name: str
    polygon: tuple[tuple[int, int], ...]
    area_ts: int

    @functools.cached_property
    def cells(self) -> frozenset[TriCell]:
        return rasterize_polygon(self.polygon)


# legs axis-aligned, anchored at the origin
TANS = {
    "Ts": Tan("Ts", ((0, 0), (1, 0), (0, 1)), 2),
    "S": Tan("S", ((0, 0), (1, 0), (1, 1), (0, 1)), 4),
    "P": Tan("P", ((0, 0), (1, 0), (2, 1), (1, 1)), 4),
    "Tm": Tan("Tm", ((0, 0), (2, 0), (1, 1)), 4),
    "Tb": Tan("Tb", ((0, 0), (2, 0), (0, 2)), 8),
    "Tr": Tan("Tr", ((0, 0), (2, 0), (2, 1), (1, 1)), 6),
    "Tz": Tan("Tz", ((0, 0), (3, 0), (2, 1), (1, 1)), 8),
}


@dataclass(frozen=True)
class TanSet:
    kind: str
    counts: tuple[tuple[str, int], ...]

    @property
    def tans(self) -> list[Tan]:
        """The pieces as a flat list, copies repeated."""
        return [TANS[n] for n, k in self.counts for _ in range(k)]

    def multiset(self) -> dict[str, int]:
        return dict(self.counts)

    @property
    def area_ts(self) -> int:
        return sum(TANS[n].area_ts * k for n, k in self.counts)


_SETS = {
    "japanese": {"Ts": 1, "S": 1, "P": 1, "Tm": 2, "Tr": 1, "Tz": 1},
    "chinese": {"Ts": 2, "S": 1, "P": 1, "Tm": 1, "Tb": 2},
}


def tan_set(kind: str) -> TanSet:
    try:
        counts = _SETS[kind]
    except KeyError:
        raise ValueError(f"unknown tan set {kind!r}; expected one of {sorted(_SETS)}") from None
    return TanSet(kind, tuple((n, counts[n]) for n in TAN_ORDER if n in counts))


# ---------------------------------------------------------------------------
# Census

@dataclass(frozen=True)
class ShapeEntry:
    """One convex target shape.

    ``descriptor`` is (W, H, a, b, c, d): a W x H rectangle with 45-degree
    corner cuts of leg a (bottom-left), b (bottom-right), c (top-right) and
    d (top-left).
    """

    descriptor: tuple[int, int, int, int, int, int]
    region: Region
    key: str
    number: int | None = None

    @property
    def label(self) -> str:
        return f"J{self.number:02d}" if self.number else self.key


def cut_rectangle(w: int, h: int, a: int, b: int, c: int, d: int) -> list[tuple[int, int]]:
    """Vertices (ccw) of a rectangle with the four corners cut off."""
    pts = [(a, 0), (w - b, 0), (w, b), (w, h - c), (w - c, h), (d, h), (0, h - d), (0, a)]
    out: list[tuple[int, int]] = []
    for p in pts:
        if not out or out[-1] != p:
            out.append(p)
    if out[0] == out[-1]:
        out.pop()
    return out


class CensusError(RuntimeError):
    pass


MAX_SIDE = 10


def _descriptors(area: int = 8, max_side: int = MAX_SIDE):
    # w >= h: the transposed rectangle describes a congruent shape
    for w, h in product(range(1, max_side + 1), repeat=2):
        if w < h:
            continue
        for a, b, c, d in product(range(min(w, h) + 1), repeat=4):
            if a + b > w or c + d > w or b + c > h or a + d > h:
                continue
            if 2 * w * h - (a * a + b * b + c * c + d * d) != 2 * area:
                continue
            yield (w, h, a, b, c, d)


@functools.lru_cache(maxsize=None)
def enumerate_convex_shapes() -> tuple[ShapeEntry, ...]:
    """All 20 convex lattice polygons of area 8, up to congruence.

    Entries are ordered by region key and numbered where the shape-numbering
    file identifies them.
    """
    found: dict[str, tuple] = {}
    for desc in _descriptors():
        cells = rasterize_polygon(cut_rectangle(*desc))
        k = region_key(cells)
        if k not in found:
            found[k] = (desc, cells)
    if len(found) != 20:
        raise CensusError(f"census found {len(found)} convex shapes, expected 20")
    numbers = {k: n for n, k in load_numbering().items()}
    return tuple(
        ShapeEntry(desc, Region(cells, _name(numbers.get(k), k)), k, numbers.get(k))
        for k, (desc, cells) in sorted(found.items()))


def _name(n: int | None, key: str) -> str:
    return f"J{n:02d}" if n else key


# ---------------------------------------------------------------------------
# Shape numbering (J01..J16)

NUMBERING_FILE = "shape_numbers.txt"


class NumberingError(RuntimeError):
    pass


def _pinned() -> dict[int, str]:
    return {
        7: region_key(rasterize_polygon(cut_rectangle(4, 4, 2, 2, 2, 2))),
        14: region_key(rasterize_polygon(cut_rectangle(8, 1, 0, 0, 0, 0))),
        15: region_key(rasterize_polygon(cut_rectangle(9, 1, 1, 1, 0, 0))),
        16: region_key(rasterize_polygon(cut_rectangle(9, 1, 1, 0, 1, 0))),
    }


def parse_numbering(text: str) -> dict[int, str]:
    out: dict[int, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            n_str, key = line.split()
            n = int(n_str)
        except ValueError:
            raise NumberingError(f"line {lineno}: expected '<n> <region-key>'") from None
        if not 1 <= n <= 16 or n in out:
            raise NumberingError(f"line {lineno}: bad or repeated shape number {n}")
        out[n] = key
    if sorted(out) != list(range(1, 17)):
        raise NumberingError(f"numbering covers {sorted(out)}, expected 1..16")
    if len(set(out.values())) != 16:
        raise NumberingError("numbering maps two shape numbers to the same region")
    for n, key in _pinned().items():
        if out[n] != key:
            raise NumberingError(f"shape {n} must be {key}, file says {out[n]}")
    return out


@functools.lru_cache(maxsize=None)
def _load_numbering_text(path: str | None) -> str:
    if path is None:
        return resources.files(__package__).joinpath(NUMBERING_FILE).read_text()
    return Path(path).read_text()


def load_numbering(path: str | Path | None = None) -> dict[int, str]:
    try:
        text = _load_numbering_text(None if path is None else str(path))
    except OSError as exc:
        raise NumberingError(f"cannot read shape-numbering file: {exc}") from None
    return parse_numbering(text)


def shape_by_number(n: int) -> ShapeEntry:
    if not 1 <= n <= 16:
        raise KeyError(f"shape number must be 1..16, got {n}")
    for e in enumerate_convex_shapes():
        if e.number == n:
            return e
    raise NumberingError(f"shape-numbering key for {n} is not in the census")


def shape_by_key(key: str) -> ShapeEntry:
    for e in enumerate_convex_shapes():
        if e.key == key:
            return e
    raise KeyError(f"no census shape with key {key!r}")


def classify_coverability(shape: ShapeEntry, kind: str) -> bool:
    """True iff the tan set ``kind`` can cover the shape at all."""
    from .solver import exists_partition

    return exists_partition(shape.region, tan_set(kind))

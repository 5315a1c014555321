"""Oriented variants of each tan and their placements inside a region."""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Tan
from .trigrid import (
    Region,
    Transform,
    TriCell,
    cell_index,
    normalize,
    point_group,
    transform_cells,
)


@dataclass(frozen=True)
class OrientedVariant:
    name: str
    transform: Transform
    cells: frozenset[TriCell]


@dataclass(frozen=True)
class Embedding:
    name: str
    cells: frozenset[TriCell]
    mask: int
    instance: int = 0


def orientations(tan: Tan, allow_reflection: bool = True) -> list[OrientedVariant]:
    out: list[OrientedVariant] = []
    seen: set[frozenset] = set()
    for g in point_group(allow_reflection):
        cells = normalize(transform_cells(g, tan.cells))
        if cells not in seen:
            seen.add(cells)
            out.append(OrientedVariant(tan.name, g, cells))
    return out


def embeddings(tan: Tan, region: Region, allow_reflection: bool = True) -> list[Embedding]:
    """Every placement of ``tan`` inside ``region``.

    Ordered by variant, then by the anchor square of the placement's
    bounding box (row-major).
    """
    b = region.bounds
    out = []
    for v in orientations(tan, allow_reflection):
        vw = max(c.x for c in v.cells) + 1
        vh = max(c.y for c in v.cells) + 1
        for oy in range(b.y0, b.y0 + b.height - vh + 1):
            for ox in range(b.x0, b.x0 + b.width - vw + 1):
                cells = frozenset(TriCell(c.x + ox, c.y + oy, c.q) for c in v.cells)
                if cells <= region.cells:
                    mask = 0
                    for c in cells:
                        mask |= 1 << cell_index(c, b)
                    out.append(Embedding(tan.name, cells, mask))
    return out


def build_cover_index(embs: list[Embedding], region: Region) -> dict[int, list[Embedding]]:
    """Map every region cell index to the embeddings covering it.

    Cells that no embedding covers map to an empty list.
    """
    b = region.bounds
    index: dict[int, list[Embedding]] = {cell_index(c, b): [] for c in region.cells}
    for e in embs:
        m = e.mask
        while m:
            low = m & -m
            index[low.bit_length() - 1].append(e)
            m ^= low
    return index

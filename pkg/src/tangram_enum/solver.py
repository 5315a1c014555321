"""Backtracking exact-cover search over bit-set occupancy masks."""

from __future__ import annotations

from typing import Callable, Iterator, Sequence

from . import canon
from .canon import Placement, Solution
from .catalog import TANS, TanSet
from .embed import Embedding, build_cover_index, embeddings
from .trigrid import Region, cell_index, edge_neighbors

MODES = ("labeled", "canonical", "colored")


class AreaMismatch(ValueError):
    pass


def _neighbor_masks(region: Region) -> dict[int, int]:
    b = region.bounds
    out = {}
    for c in region.cells:
        m = 0
        for n in edge_neighbors(c):
            if n in region.cells:
                m |= 1 << cell_index(n, b)
        out[cell_index(c, b)] = m
    return out


def _subset_sums(areas: Sequence[int]) -> set[int]:
    sums = {0}
    for a in areas:
        sums |= {s + a for s in sums}
    return sums


class _Search:
    def __init__(self, region: Region, tans: TanSet, allow_reflection: bool,
                 order: Callable[[list[Embedding]], list[Embedding]] | None, prune: bool):
        if region.area_ts != tans.area_ts:
            raise AreaMismatch(
                f"region has {region.area_ts} ts cells, tan set {tans.kind} has {tans.area_ts}")
        self.region = region
        self.full = region.mask()
        embs: list[Embedding] = []
        for name, _ in tans.counts:
            embs += embeddings(TANS[name], region, allow_reflection)
        index = build_cover_index(embs, region)
        if order is not None:
            index = {k: order(list(v)) for k, v in index.items()}
        self.index = index
        self.remaining = dict(tans.counts)
        self.prune = prune
        self.neighbors = _neighbor_masks(region) if prune else {}

    def _components_ok(self, free: int) -> bool:
        # every free component must be fillable by some subset of the remaining pieces
        sums = _subset_sums([TANS[n].area_ts for n, k in self.remaining.items() for _ in range(k)])
        while free:
            comp = free & -free
            frontier = comp
            while frontier:
                grow = 0
                f = frontier
                while f:
                    low = f & -f
                    grow |= self.neighbors[low.bit_length() - 1]
                    f ^= low
                frontier = grow & free & ~comp
                comp |= frontier
            if comp.bit_count() not in sums:
                return False
            free &= ~comp
        return True

    def run(self, first_only: bool = False) -> Iterator[list[Embedding]]:
        stack: list[Embedding] = []

        def rec(covered: int) -> Iterator[list[Embedding]]:
            free = self.full & ~covered
            if not free:
                yield list(stack)
                return
            if self.prune and not self._components_ok(free):
                return
            low = free & -free
            for e in self.index[low.bit_length() - 1]:
                if self.remaining[e.name] and not (e.mask & covered):
                    self.remaining[e.name] -= 1
                    stack.append(e)
                    yield from rec(covered | e.mask)
                    stack.pop()
                    self.remaining[e.name] += 1

        yield from rec(0)


def _to_solution(embs: list[Embedding], region: Region) -> Solution:
    b = region.bounds
    rank = {n: i for i, n in enumerate(canon.TAN_ORDER)}
    ordered = sorted(embs, key=lambda e: (rank[e.name], min(cell_index(c, b) for c in e.cells)))
    placements = []
    seen: dict[str, int] = {}
    for e in ordered:
        seen[e.name] = seen.get(e.name, 0) + 1
        placements.append(Placement(e.name, e.cells, seen[e.name]))
    return Solution(tuple(placements))


def iter_partitions(region: Region, tans: TanSet, allow_reflection: bool = True,
                    order=None, prune: bool = True) -> Iterator[Solution]:
    search = _Search(region, tans, allow_reflection, order, prune)
    for embs in search.run():
        yield _to_solution(embs, region)


def enumerate_partitions(region: Region, tans: TanSet, allow_reflection: bool = True,
                         order=None, prune: bool = True) -> list[Solution]:
    """All labeled partitions of ``region`` by ``tans``, in search order.

    Copies of the same piece are unordered: each set of placements appears
    once, with instance ids given by ascending lowest cell index. ``order``
    may permute each cell's candidate list (used to test order
    independence); ``prune`` toggles the free-component area check.
    """
    return list(iter_partitions(region, tans, allow_reflection, order, prune))


def exists_partition(region: Region, tans: TanSet, allow_reflection: bool = True) -> bool:
    return next(iter_partitions(region, tans, allow_reflection), None) is not None


def count_partitions(region: Region, tans: TanSet, mode: str = "canonical",
                     allow_reflection: bool = True) -> int:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    sols = enumerate_partitions(region, tans, allow_reflection)
    if mode == "labeled":
        return len(sols)
    canonicals = canon.dedupe(sols, region)
    if mode == "canonical":
        return len(canonicals)
    return canon.colored_count(canonicals, region)

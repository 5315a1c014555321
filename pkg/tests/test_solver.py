import random

import pytest

from tangram_enum import canon
from tangram_enum.catalog import TANS, TanSet, tan_set
from tangram_enum.solver import (
    AreaMismatch,
    count_partitions,
    enumerate_partitions,
    exists_partition,
)
from tangram_enum.trigrid import Region

from conftest import labeled, region
from test_embed import brute_force_placements

# Frozen from placement_oracle below (fixed piece order, all placements of
# each piece, copies of Tm taken in increasing placement order).
ORACLE_LABELED = {14: 96, 7: 24, 12: 16}


def placement_oracle(reg, kind="japanese"):
    names = [t.name for t in tan_set(kind).tans]
    places = {n: sorted(brute_force_placements(TANS[n], reg), key=sorted) for n in set(names)}
    count = 0

    def rec(i, used, last):
        nonlocal count
        if i == len(names):
            count += used == reg.cells
            return
        n = names[i]
        start = last + 1 if i > 0 and names[i - 1] == n else 0
        for j in range(start, len(places[n])):
            p = places[n][j]
            if not p & used:
                rec(i + 1, used | p, j)

    rec(0, frozenset(), -1)
    return count


@pytest.mark.parametrize("n", sorted(ORACLE_LABELED))
def test_labeled_count_matches_oracle(n):
    assert placement_oracle(region(n)) == ORACLE_LABELED[n]
    assert len(labeled(n)) == ORACLE_LABELED[n]


def test_piece_fills_its_own_outline():
    reg = Region(TANS["Tz"].cells)
    sols = enumerate_partitions(reg, TanSet("single", (("Tz", 1),)))
    assert len(sols) == 1


def test_strip_with_chinese_set(chinese):
    assert enumerate_partitions(region(14), chinese) == []


def test_area_mismatch(japanese):
    with pytest.raises(AreaMismatch):
        enumerate_partitions(Region(TANS["Tz"].cells), japanese)


@pytest.mark.parametrize("n", range(1, 17))
def test_every_solution_is_an_exact_cover(n, japanese):
    reg = region(n)
    for sol in labeled(n):
        canon.validate(sol, reg, japanese.multiset())


@pytest.mark.parametrize("n", [7, 12, 14])
def test_labeled_output_has_no_duplicates(n):
    sets = [frozenset((p.name, p.cells) for p in s.placements) for s in labeled(n)]
    assert len(set(sets)) == len(sets)


def _as_sets(sols):
    return {frozenset((p.name, p.cells) for p in s.placements) for s in sols}


@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("n", [7, 11, 14])
def test_candidate_order_does_not_change_the_set(n, seed, japanese):
    rng = random.Random(seed)

    def shuffle(cands):
        rng.shuffle(cands)
        return cands

    shuffled = enumerate_partitions(region(n), japanese, order=shuffle)
    assert _as_sets(shuffled) == _as_sets(labeled(n))


@pytest.mark.parametrize("n", [1, 7, 12, 14, 16])
def test_pruning_does_not_change_the_set(n, japanese):
    assert _as_sets(enumerate_partitions(region(n), japanese, prune=False)) == _as_sets(labeled(n))


@pytest.mark.parametrize("n", [7, 12, 14, 15])
def test_closed_under_region_symmetry(n):
    reg = region(n)
    sols = _as_sets(labeled(n))
    for g in reg.symmetries:
        assert _as_sets(s.transformed(g) for s in labeled(n)) == sols


def test_deterministic_order(japanese):
    a = enumerate_partitions(region(14), japanese)
    assert a == list(labeled(14))


def test_exists_partition(japanese, chinese):
    assert exists_partition(region(7), japanese)
    assert not exists_partition(region(15), chinese)


def test_count_modes(japanese):
    assert count_partitions(region(7), japanese, "canonical") == 3
    assert count_partitions(region(16), japanese, "canonical") == 60
    assert count_partitions(region(14), japanese, "labeled") == ORACLE_LABELED[14]
    with pytest.raises(ValueError):
        count_partitions(region(7), japanese, "bogus")


def test_tm_instances_numbered_by_position():
    from tangram_enum.trigrid import cell_index

    b = region(14).bounds
    for sol in labeled(14):
        tms = sorted((p for p in sol.placements if p.name == "Tm"), key=lambda p: p.instance)
        assert [p.instance for p in tms] == [1, 2]
        assert min(cell_index(c, b) for c in tms[0].cells) < min(cell_index(c, b) for c in tms[1].cells)

import pytest

from tangram_enum import canon
from tangram_enum.canon import canonicalize, colored_count, dedupe, region_from_key, region_key, solution_key
from tangram_enum.catalog import enumerate_convex_shapes

from conftest import canonicals, labeled, region

# colored counts observed for every Japanese-coverable shape: always twice
# the monochrome count, i.e. no partition is fixed by a symmetry that also
# swaps the two Tm.
COLORED = {n: 2 * c for n, c in enumerate(
    (34, 38, 43, 61, 19, 72, 3, 21, 23, 21, 16, 4, 32, 24, 60, 60), start=1)}


@pytest.mark.parametrize("n", [7, 14])
def test_key_invariant_under_symmetries(n):
    reg = region(n)
    for sol in labeled(n):
        k = solution_key(sol, reg)
        for g in reg.symmetries:
            assert solution_key(sol.transformed(g), reg) == k


def test_key_ignores_tm_swap():
    reg = region(14)
    for sol in labeled(14):
        assert solution_key(sol.swapped("Tm"), reg) == solution_key(sol, reg)
        # in colored mode the swap is a different partition
        assert solution_key(sol.swapped("Tm"), reg, colored=True) != solution_key(sol, reg, colored=True)


def test_canonicalize_idempotent():
    reg = region(7)
    for cs in canonicals(7):
        again = canonicalize(cs.representative, reg)
        assert again.key == cs.key


def test_invalid_solution_rejected():
    reg = region(14)
    sol = labeled(14)[0]
    broken = canon.Solution(sol.placements[:-1])
    with pytest.raises(canon.InvalidSolution):
        canonicalize(broken, reg)


def test_asymmetric_strip_orbit():
    # distinct images of one enumerated J14 solution under the rectangle group
    reg = region(14)
    sol = labeled(14)[0]
    images = {frozenset((p.name, p.cells) for p in sol.transformed(g).placements)
              for g in reg.symmetries}
    assert len(images) == 4
    # with the Tm swap the colored orbit doubles
    assert canonicalize(sol, reg).orbit_size == 8


@pytest.mark.parametrize("n,expected", [(14, 24), (7, 3), (12, 4)])
def test_dedupe_counts(n, expected):
    assert len(canonicals(n)) == expected


@pytest.mark.parametrize("n", [7, 12, 14])
def test_orbits_reconcile_with_labeled(n):
    # each canonical orbit holds orbit_size colored solutions, i.e.
    # orbit_size / 2 unordered-Tm labeled solutions
    assert sum(c.orbit_size for c in canonicals(n)) // 2 == len(labeled(n))
    for c in canonicals(n):
        assert (len(region(n).symmetries) * 2) % c.orbit_size == 0


def test_dedupe_sorted_and_valid():
    reg = region(16)
    cs = canonicals(16)
    assert [c.key for c in cs] == sorted(c.key for c in cs)
    for c in cs:
        canon.validate(c.representative, reg)


def test_dedupe_independent_of_input_order():
    reg = region(14)
    assert [c.key for c in dedupe(reversed(labeled(14)), reg)] == [c.key for c in canonicals(14)]


def labeled_orbit_oracle(sols, reg):
    """Count colored partitions straight from labeled solutions."""
    keys = set()
    for sol in sols:
        variants = [sol]
        for name, k in sol.names().items():
            if k == 2:
                variants += [v.swapped(name) for v in variants]
        for v in variants:
            keys.add(min(canon.serialize(v.transformed(g), reg.bounds, colored=True)
                         for g in reg.symmetries))
    return len(keys)


@pytest.mark.parametrize("n", [7, 12, 14, 16])
def test_colored_count_matches_oracle(n):
    reg = region(n)
    assert colored_count(canonicals(n), reg) == labeled_orbit_oracle(labeled(n), reg) == COLORED[n]


@pytest.mark.parametrize("n", range(1, 17))
def test_colored_is_twice_monochrome(n):
    assert colored_count(canonicals(n), region(n)) == COLORED[n]


def test_chinese_square_colored_ratio():
    reg = region(7)
    mono = canonicals(7, "chinese")
    col = colored_count(mono, reg)
    assert len(mono) == 1
    assert col == labeled_orbit_oracle(labeled(7, "chinese"), reg)
    assert len(mono) <= col <= 4 * len(mono)


def test_region_key_round_trip():
    for e in enumerate_convex_shapes():
        back = region_from_key(e.key)
        assert region_key(back.cells) == e.key


def test_region_key_format():
    assert region(14).cells and region_key(region(14).cells) == "1x8:ffffffff"


def test_malformed_region_key():
    with pytest.raises(ValueError):
        region_from_key("8x1:fff")
    with pytest.raises(ValueError):
        region_from_key("garbage")

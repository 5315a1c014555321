from collections import Counter

import pytest

from tangram_enum import canon, strips
from tangram_enum.canon import Placement, Solution
from tangram_enum.strips import CutEdge, StripError, cut_and_paste, cut_edges, twin_of, twin_pairs
from tangram_enum.trigrid import Quadrant, TriCell

from conftest import canonicals, region


@pytest.fixture(scope="module")
def j14():
    return canonicals(14)


@pytest.fixture(scope="module")
def pairs(j14):
    return twin_pairs(list(j14))


def test_cut_profile(j14):
    assert len(j14) == 24
    for c in j14:
        cuts = cut_edges(c)
        kinds = Counter(k.kind for k in cuts)
        assert len(cuts) == 6
        assert kinds == {"vertical": 1, "skew": 5}


def test_synthetic_square_strip():
    squares = Solution(tuple(
        Placement("S", frozenset(TriCell(x, 0, q) for q in Quadrant), x + 1) for x in range(8)))
    cuts = cut_edges(squares)
    assert cuts == [CutEdge(x, x) for x in range(1, 8)]


def test_cut_edges_rejects_other_shapes():
    with pytest.raises(StripError):
        cut_edges(canonicals(7)[0])


def test_vertical_cut_beside_square(j14):
    for c in j14:
        (v,) = [k for k in cut_edges(c) if k.kind == "vertical"]
        sq = next(p for p in c.representative.placements if p.name == "S")
        xs = {cl.x for cl in sq.cells}
        assert v.bottom - 1 in xs or v.bottom in xs


def test_twin_pairs(j14, pairs):
    assert len(pairs) == 12
    keys = [k for a, b in pairs for k in (a.key, b.key)]
    assert sorted(keys) == sorted(c.key for c in j14)


def test_twin_is_fixed_point_free_involution(j14):
    for c in j14:
        t = twin_of(c)
        assert t.key != c.key
        assert twin_of(t).key == c.key


def _remainder(sol):
    """Non-square placements, translated so the group starts at x = 0."""
    rest = [p for p in sol.placements if p.name != "S"]
    x0 = min(c.x for p in rest for c in p.cells)
    return frozenset((p.name, frozenset(TriCell(c.x - x0, c.y, c.q) for c in p.cells)) for p in rest)


def test_twin_keeps_the_remainder(j14):
    reg = region(14)
    for c in j14:
        t = twin_of(c)
        assert t.representative.names() == c.representative.names()
        images = {_remainder(t.representative.transformed(g)) for g in reg.symmetries}
        assert _remainder(c.representative) in images


def test_cut_and_paste_needs_skew(j14):
    v = next(k for k in cut_edges(j14[0]) if k.kind == "vertical")
    with pytest.raises(StripError):
        cut_and_paste(j14[0], v)


@pytest.fixture(scope="module")
def pasted(pairs):
    out = []
    for a, _ in pairs:
        for k in cut_edges(a):
            if k.kind == "skew":
                out.append(cut_and_paste(a, k))
    return out


def test_cut_and_paste_counts(pasted):
    assert len(pasted) == 60
    assert len({p15.key for p15, _ in pasted}) == 60
    assert len({p16.key for _, p16 in pasted}) == 60


def test_cut_and_paste_outputs_valid(pasted, japanese):
    r15, r16 = region(15), region(16)
    for p15, p16 in pasted:
        canon.validate(p15.representative, r15, japanese.multiset())
        canon.validate(p16.representative, r16, japanese.multiset())


def test_cut_and_paste_matches_direct_search(pasted):
    assert {p.key for p, _ in pasted} == {c.key for c in canonicals(15)}
    assert {p.key for _, p in pasted} == {c.key for c in canonicals(16)}


def test_twins_give_the_same_strips(pairs):
    for a, b in pairs:
        outs = []
        for sol in (a, b):
            outs.append({tuple(x.key for x in cut_and_paste(sol, k))
                         for k in cut_edges(sol) if k.kind == "skew"})
        assert outs[0] == outs[1]


def test_verify_strip_theorem():
    rep = strips.verify_strip_theorem(canonicals(14), canonicals(15), canonicals(16))
    assert rep.passed, rep.to_text()
    d = rep.to_dict()
    assert d["twin_pairs"] == 12 and d["self_twins"] == 0
    assert d["generated"] == d["enumerated"] == {"J15": 60, "J16": 60}
    assert d["vertical_cut_always_beside_square"]
    assert "PASS" in rep.to_text()


def test_verify_reports_a_discrepancy():
    rep = strips.verify_strip_theorem(canonicals(14), canonicals(15)[:-1], canonicals(16))
    assert not rep.passed
    assert rep.set_equal == {"J15": False, "J16": True}

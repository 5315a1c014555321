
import pytest

from tangram_enum.catalog import TANS, tan_set
from tangram_enum.embed import build_cover_index, embeddings, orientations
from tangram_enum.trigrid import (
    Region,
    TriCell,
    cell,
    cell_index,
    normalize,
    point_group,
    rasterize_polygon,
    transform_cells,
)

from conftest import region

EXPECTED_ORIENTATIONS = {"Ts": 4, "S": 1, "P": 4, "Tm": 4, "Tb": 4, "Tr": 8, "Tz": 4}


def polygon_orientations(tan, allow_reflection=True):
    """Oracle: transform the polygon's vertices, re-rasterize, dedupe."""
    out = set()
    for g in point_group(allow_reflection):
        pts = [g.point2(2 * x, 2 * y) for x, y in tan.polygon]
        pts = [(px / 2, py / 2) for px, py in pts]
        if g.mirror:
            pts.reverse()  # keep counterclockwise order
        out.add(normalize(rasterize_polygon(pts)))
    return out


@pytest.mark.parametrize("name", list(TANS))
def test_orientation_counts_match_oracle(name):
    tan = TANS[name]
    variants = orientations(tan)
    oracle = polygon_orientations(tan)
    assert {v.cells for v in variants} == oracle
    assert len(variants) == EXPECTED_ORIENTATIONS[name]
    assert 8 % len(variants) == 0


@pytest.mark.parametrize("name", list(TANS))
def test_orientations_closed_under_group(name):
    variants = {v.cells for v in orientations(TANS[name])}
    for v in variants:
        for g in point_group():
            assert normalize(transform_cells(g, v)) in variants


def test_reflection_flag():
    assert len(orientations(TANS["P"], allow_reflection=False)) == 2
    assert len(orientations(TANS["P"])) == 4
    assert {v.cells for v in orientations(TANS["Tr"], False)} == polygon_orientations(TANS["Tr"], False)


def brute_force_placements(tan, reg):
    """Oracle: every variant at every translation in a generous window."""
    b = reg.bounds
    out = set()
    for v in polygon_orientations(tan):
        for dx in range(b.x0 - 4, b.x0 + b.width + 4):
            for dy in range(b.y0 - 4, b.y0 + b.height + 4):
                cells = frozenset(TriCell(c.x + dx, c.y + dy, c.q) for c in v)
                if cells <= reg.cells:
                    out.add(cells)
    return out


def test_square_in_strip():
    embs = embeddings(TANS["S"], region(14))
    assert len(embs) == 8


def test_tz_in_strip():
    embs = embeddings(TANS["Tz"], region(14))
    assert len(embs) == 12


@pytest.mark.parametrize("n", [7, 12, 14, 16])
@pytest.mark.parametrize("name", ["Ts", "P", "Tm", "Tr", "Tz", "Tb"])
def test_embeddings_match_brute_force(n, name):
    reg = region(n)
    embs = embeddings(TANS[name], reg)
    cells = [e.cells for e in embs]
    assert len(set(cells)) == len(cells)
    assert set(cells) == brute_force_placements(TANS[name], reg)
    for e in embs:
        assert len(e.cells) == TANS[name].area_ts
        assert e.mask.bit_count() == len(e.cells)
        decoded = {i for i in range(reg.bounds.size) if e.mask >> i & 1}
        assert decoded == {cell_index(c, reg.bounds) for c in e.cells}


def test_no_fit():
    tiny = Region(rasterize_polygon([(0, 0), (1, 0), (1, 1), (0, 1)]))
    assert embeddings(TANS["Tz"], tiny) == []


def test_embeddings_invariant_under_region_symmetry():
    reg = region(7)
    for name in TANS:
        embs = {e.cells for e in embeddings(TANS[name], reg)}
        for g in reg.symmetries:
            assert {transform_cells(g, c) for c in embs} == embs


def _all_embeddings(reg, kind="japanese"):
    embs = []
    for name, _ in tan_set(kind).counts:
        embs += embeddings(TANS[name], reg)
    return embs


def test_cover_index_double_counting():
    reg = region(14)
    embs = _all_embeddings(reg)
    index = build_cover_index(embs, reg)
    assert sum(len(v) for v in index.values()) == sum(TANS[e.name].area_ts for e in embs)
    assert set(index) == {cell_index(c, reg.bounds) for c in reg.cells}


@pytest.mark.parametrize("n", range(1, 17))
def test_every_cell_has_a_candidate(n):
    reg = region(n)
    index = build_cover_index(_all_embeddings(reg), reg)
    assert all(index.values())


def test_uncoverable_cell_gives_no_solutions(japanese):
    from tangram_enum.solver import enumerate_partitions

    # an area-32 region with one cell that only a lone ts triangle could fill
    strip = rasterize_polygon([(0, 0), (8, 0), (8, 1), (0, 1)])
    cells = (strip - {cell(7, 0, "E")}) | {cell(8, 0, "W")}
    reg = Region(frozenset(cells))
    index = build_cover_index(_all_embeddings(reg), reg)
    assert not all(index.values())
    assert enumerate_partitions(reg, japanese) == []

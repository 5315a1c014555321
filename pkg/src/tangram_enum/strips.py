"""Cut-and-paste structure of the height-1 strips J14, J15 and J16.

A J14 partition (the 1 x 8 rectangle) separates along straight
bottom-to-top segments that run on piece boundaries. Exactly one is
vertical, next to the square; cutting there and swapping the halves gives
the partition's twin. Cutting at any of the five skew segments and swapping
the halves gives a parallelogram (J16) partition, or, with one half turned
upside down, a trapezium (J15) partition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import canon
from .canon import CanonicalSolution, Placement, Solution
from .catalog import shape_by_number, tan_set
from .solver import enumerate_partitions
from .trigrid import Quadrant, Region, Transform, TriCell, transform_cells

N, E, S, W = Quadrant.N, Quadrant.E, Quadrant.S, Quadrant.W
STRIP_LEN = 8


class StripError(ValueError):
    """Raised when a strip partition breaks the structure this module relies on."""


@dataclass(frozen=True, order=True)
class CutEdge:
    """A full-height separating segment from (bottom, 0) to (top, 1)."""

    bottom: int
    top: int

    @property
    def kind(self) -> str:
        return "vertical" if self.bottom == self.top else "skew"

    @property
    def position(self) -> int:
        return min(self.bottom, self.top)

    def left_of(self, c: TriCell) -> bool:
        if c.x != self.position or self.kind == "vertical":
            return c.x < self.position
        if self.top > self.bottom:
            return c.q in (N, W)
        return c.q in (S, W)


def _as_solution(sol: Solution | CanonicalSolution) -> Solution:
    return sol.representative if isinstance(sol, CanonicalSolution) else sol


def j14() -> Region:
    return shape_by_number(14).region


def _owner_map(sol: Solution) -> dict[TriCell, int]:
    return {c: i for i, p in enumerate(sol.placements) for c in p.cells}


def cut_edges(sol: Solution | CanonicalSolution, length: int = STRIP_LEN) -> list[CutEdge]:
    """All separating bottom-to-top segments of a 1 x ``length`` strip partition.

    Works on any partition of the axis-aligned strip occupying
    [0, length] x [0, 1], not only seven-piece ones.
    """
    sol = _as_solution(sol)
    owner = _owner_map(sol)
    strip = {TriCell(x, 0, q) for x in range(length) for q in Quadrant}
    if set(owner) != strip:
        raise StripError(f"not a partition of the 1x{length} strip at the origin")
    out = []
    for x in range(length):
        if x > 0 and owner[TriCell(x - 1, 0, E)] != owner[TriCell(x, 0, W)]:
            out.append(CutEdge(x, x))
        o = {q: owner[TriCell(x, 0, q)] for q in Quadrant}
        if o[S] != o[W] and o[N] != o[E]:
            out.append(CutEdge(x, x + 1))
        if o[S] != o[E] and o[N] != o[W]:
            out.append(CutEdge(x + 1, x))
    return sorted(out, key=lambda c: (c.bottom + c.top, c.bottom))


def _split(sol: Solution, cut: CutEdge) -> tuple[list[Placement], list[Placement]]:
    left, right = [], []
    for p in sol.placements:
        sides = {cut.left_of(c) for c in p.cells}
        if len(sides) != 1:
            raise StripError(f"cut {cut} crosses {p.label}")
        (left if sides.pop() else right).append(p)
    return left, right


def _moved(ps: Iterable[Placement], t: Transform) -> list[Placement]:
    return [Placement(p.name, transform_cells(t, p.cells), p.instance) for p in ps]


def _recanonicalize(placements: list[Placement], region: Region) -> CanonicalSolution:
    sol = Solution(tuple(placements))
    g = canon.align_to(sol.cells(), region)
    if g is None:
        raise StripError(f"reassembled strip is not congruent to {region.name}")
    moved = sol.transformed(g)
    try:
        return canon.canonicalize(moved, region)
    except canon.InvalidSolution as exc:
        raise StripError(str(exc)) from None


def vertical_cut(sol: Solution | CanonicalSolution) -> CutEdge:
    verticals = [c for c in cut_edges(sol) if c.kind == "vertical"]
    if len(verticals) != 1:
        raise StripError(f"expected exactly one vertical cut, found {len(verticals)}")
    return verticals[0]


def twin_of(sol: Solution | CanonicalSolution) -> CanonicalSolution:
    """Cut at the vertical edge and swap the two halves."""
    sol = _as_solution(sol)
    cut = vertical_cut(sol)
    left, right = _split(sol, cut)
    k = cut.position
    swapped = _moved(left, Transform(dx=STRIP_LEN - k)) + _moved(right, Transform(dx=-k))
    return _recanonicalize(swapped, j14())


# reflection across the horizontal line y = 1/2
_UPSIDE_DOWN = Transform(rot=2, mirror=True, dy=1)


def cut_and_paste(sol: Solution | CanonicalSolution,
                  cut: CutEdge) -> tuple[CanonicalSolution, CanonicalSolution]:
    """Swap the halves either side of a skew cut.

    Returns the (J15, J16) partitions. The right half is moved to the left
    end; the left half is reattached at the right end, either as is or
    turned upside down. Which reassembly is which shape is decided by
    congruence.
    """
    if cut.kind != "skew":
        raise StripError(f"cut_and_paste needs a skew cut, got {cut}")
    sol = _as_solution(sol)
    left, right = _split(sol, cut)
    as_is = right + _moved(left, Transform(dx=STRIP_LEN))
    flipped = right + _moved(_moved(left, _UPSIDE_DOWN), Transform(dx=STRIP_LEN))
    j15, j16 = shape_by_number(15).region, shape_by_number(16).region
    out: dict[str, CanonicalSolution] = {}
    for ps in (as_is, flipped):
        cells = frozenset().union(*(p.cells for p in ps))
        key = canon.region_key(cells)
        if key == canon.region_key(j15.cells):
            out["J15"] = _recanonicalize(ps, j15)
        elif key == canon.region_key(j16.cells):
            out["J16"] = _recanonicalize(ps, j16)
    if set(out) != {"J15", "J16"}:
        raise StripError(f"reassembly at {cut} produced {sorted(out)} instead of J15 and J16")
    return out["J15"], out["J16"]


def twin_pairs(canonicals: list[CanonicalSolution]) -> list[tuple[CanonicalSolution, CanonicalSolution]]:
    """Pair each J14 partition with its twin, smaller key first."""
    by_key = {c.key: c for c in canonicals}
    pairs = []
    seen: set[str] = set()
    for c in canonicals:
        if c.key in seen:
            continue
        t = twin_of(c)
        if t.key not in by_key:
            raise StripError(f"twin of {c.key} is not among the given partitions")
        if twin_of(by_key[t.key]).key != c.key:
            raise StripError(f"twin relation is not an involution at {c.key}")
        seen |= {c.key, t.key}
        pairs.append((c, by_key[t.key]))
    return pairs


@dataclass
class StripReport:
    j14_count: int = 0
    twin_pairs: int = 0
    self_twins: int = 0
    cut_profile_ok: bool = False
    vertical_cut_on_square: bool = False
    twins_agree: bool = False
    generated: dict[str, int] = field(default_factory=dict)
    enumerated: dict[str, int] = field(default_factory=dict)
    set_equal: dict[str, bool] = field(default_factory=dict)
    injective: bool = False
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (not self.problems and self.cut_profile_ok and self.twins_agree
                and self.injective and self.self_twins == 0
                and self.twin_pairs * 2 == self.j14_count
                and all(self.set_equal.values()) and len(self.set_equal) == 2)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "j14_partitions": self.j14_count,
            "twin_pairs": self.twin_pairs,
            "self_twins": self.self_twins,
            "every_j14_has_1_vertical_5_skew_cuts": self.cut_profile_ok,
            "vertical_cut_always_beside_square": self.vertical_cut_on_square,
            "twins_give_same_strips": self.twins_agree,
            "cut_and_paste_injective": self.injective,
            "generated": dict(sorted(self.generated.items())),
            "enumerated": dict(sorted(self.enumerated.items())),
            "set_equal": dict(sorted(self.set_equal.items())),
            "problems": list(self.problems),
        }

    def to_text(self) -> str:
        lines = [
            f"J14 partitions: {self.j14_count}, twin pairs: {self.twin_pairs}, "
            f"self-twins: {self.self_twins}",
            f"cut profile 1 vertical + 5 skew on every J14: {self.cut_profile_ok}",
            f"vertical cut always beside S: {self.vertical_cut_on_square}",
            f"twins give the same J15/J16 strips: {self.twins_agree}",
        ]
        for name in sorted(self.enumerated):
            lines.append(f"{name}: generated {self.generated.get(name, 0)} = "
                         f"enumerated {self.enumerated[name]}: {self.set_equal.get(name)}")
        lines.extend(f"problem: {p}" for p in self.problems)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _partitions(n: int) -> list[CanonicalSolution]:
    region = shape_by_number(n).region
    return canon.dedupe(enumerate_partitions(region, tan_set("japanese")), region)


def verify_strip_theorem(j14_canonicals=None, j15_canonicals=None,
                         j16_canonicals=None) -> StripReport:
    """Rebuild every J15 and J16 partition from J14 and compare with direct search."""
    rep = StripReport()
    j14s = j14_canonicals if j14_canonicals is not None else _partitions(14)
    direct = {
        "J15": j15_canonicals if j15_canonicals is not None else _partitions(15),
        "J16": j16_canonicals if j16_canonicals is not None else _partitions(16),
    }
    rep.j14_count = len(j14s)
    try:
        profiles = []
        beside_square = []
        for c in j14s:
            cuts = cut_edges(c)
            profiles.append(len(cuts) == 6 and sum(k.kind == "vertical" for k in cuts) == 1)
            sq = next(p for p in c.representative.placements if p.name == "S")
            sq_x = next(iter(sq.cells)).x
            beside_square += [k.bottom in (sq_x, sq_x + 1) for k in cuts if k.kind == "vertical"]
        rep.cut_profile_ok = bool(profiles) and all(profiles)
        rep.vertical_cut_on_square = bool(beside_square) and all(beside_square)
        rep.self_twins = sum(twin_of(c).key == c.key for c in j14s)
        pairs = twin_pairs(j14s)
        rep.twin_pairs = len(pairs)

        generated: dict[str, set[str]] = {"J15": set(), "J16": set()}
        images = []
        agree = True
        for a, b in pairs:
            outs = []
            for sol in (a, b):
                outs.append({tuple(x.key for x in cut_and_paste(sol, k))
                             for k in cut_edges(sol) if k.kind == "skew"})
            agree &= outs[0] == outs[1]
            for k in cut_edges(a):
                if k.kind == "skew":
                    p15, p16 = cut_and_paste(a, k)
                    images.append((p15.key, p16.key))
                    generated["J15"].add(p15.key)
                    generated["J16"].add(p16.key)
        rep.twins_agree = agree
        rep.injective = (len(set(k15 for k15, _ in images)) == len(images)
                         and len(set(k16 for _, k16 in images)) == len(images))
        for name, sols in direct.items():
            keys = {c.key for c in sols}
            rep.generated[name] = len(generated[name])
            rep.enumerated[name] = len(keys)
            rep.set_equal[name] = keys == generated[name]
    except StripError as exc:
        rep.problems.append(str(exc))
    return rep

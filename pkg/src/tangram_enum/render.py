"""Deterministic SVG drawings of partitions, partition sheets and the shape census."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence
from xml.sax.saxutils import escape

from .canon import TAN_ORDER, CanonicalSolution, Placement, Solution, validate
from .trigrid import Bounds, Region, TriCell, cell_index, corners2

PALETTE = {
    "Ts": "#f2c14e",
    "S": "#e4572e",
    "P": "#76b041",
    "Tm": "#17bebb",
    "Tb": "#2e86ab",
    "Tr": "#a23b72",
    "Tz": "#6c4f8c",
}
# second copy of a piece in colored mode
PALETTE_ALT = {
    "Ts": "#c9962a",
    "Tm": "#0f8583",
    "Tb": "#1b5673",
}


@dataclass(frozen=True)
class RenderStyle:
    scale: int = 40
    colors: Mapping[str, str] = field(default_factory=lambda: dict(PALETTE))
    alt_colors: Mapping[str, str] = field(default_factory=lambda: dict(PALETTE_ALT))
    stroke_width: float = 2
    grid: bool = False
    labels: bool = True
    colored: bool = False
    margin: int = 1  # lattice units

    def fill(self, p: Placement) -> str:
        if self.colored and p.instance > 1 and p.name in self.alt_colors:
            return self.alt_colors[p.name]
        return self.colors[p.name]


def _num(v: float) -> str:
    return str(int(v)) if v == int(v) else f"{v:g}"


def outline2(cells: Iterable[TriCell]) -> list[tuple[int, int]]:
    """Boundary of a simply connected cell union, ccw, in doubled coordinates.

    Internal edges cancel in pairs; collinear runs are merged.
    """
    edges: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    for c in cells:
        a, b, m = corners2(c)
        for e in ((a, b), (b, m), (m, a)):
            rev = (e[1], e[0])
            if rev in edges:
                edges.remove(rev)
            else:
                edges.add(e)
    nxt = dict(edges)
    if len(nxt) != len(edges):
        raise ValueError("cell union boundary is not a simple loop")
    start = min(nxt)
    loop = [start]
    cur = nxt[start]
    while cur != start:
        loop.append(cur)
        cur = nxt[cur]
    if len(loop) != len(edges):
        raise ValueError("cell union has more than one boundary loop")
    out = []
    n = len(loop)
    for i in range(n):
        p0, p1, p2 = loop[i - 1], loop[i], loop[(i + 1) % n]
        if (p1[0] - p0[0]) * (p2[1] - p1[1]) != (p1[1] - p0[1]) * (p2[0] - p1[0]):
            out.append(p1)
    # rotate so the smallest vertex leads; keeps output independent of set order
    k = out.index(min(out))
    return out[k:] + out[:k]


class _Canvas:
    def __init__(self, style: RenderStyle, top2: int):
        self.style = style
        self.top2 = top2  # doubled y of the top edge of the drawing

    def pt(self, p2: tuple[int, int], ox: float = 0, oy: float = 0) -> str:
        s = self.style.scale / 2
        return f"{_num(ox + p2[0] * s)},{_num(oy + (self.top2 - p2[1]) * s)}"

    def path(self, pts2, ox=0, oy=0) -> str:
        return "M" + " L".join(self.pt(p, ox, oy) for p in pts2) + " Z"


def _ordered(placements: Iterable[Placement], bounds: Bounds) -> list[Placement]:
    rank = {n: i for i, n in enumerate(TAN_ORDER)}
    return sorted(placements, key=lambda p: (
        rank[p.name], p.instance, min(cell_index(c, bounds) for c in p.cells)))


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_num(width)}" height="{_num(height)}" '
            f'viewBox="0 0 {_num(width)} {_num(height)}">')
    return "\n".join(['<?xml version="1.0" encoding="UTF-8"?>', head, *body, "</svg>", ""])


def _panel(sol: Solution, region: Region, style: RenderStyle, ox: float, oy: float) -> list[str]:
    """Body elements for one solution with its box's top-left margin corner at (ox, oy)."""
    b = region.bounds
    m = style.margin * style.scale
    canvas = _Canvas(style, 2 * (b.y0 + b.height))
    ox, oy = ox + m - b.x0 * style.scale, oy + m
    out = []
    if style.grid:
        for c in sorted(region.cells):
            out.append(f'<path class="grid" d="{canvas.path(corners2(c), ox, oy)}" '
                       f'fill="none" stroke="#cccccc" stroke-width="0.5"/>')
    for p in _ordered(sol.placements, b):
        out.append(f'<path class="piece" data-tan="{p.label if style.colored else p.name}" '
                   f'd="{canvas.path(outline2(p.cells), ox, oy)}" fill="{style.fill(p)}" '
                   f'stroke="#222222" stroke-width="{_num(style.stroke_width)}" '
                   f'stroke-linejoin="round"/>')
    return out


def render_solution_svg(sol: Solution | CanonicalSolution, region: Region,
                        style: RenderStyle | None = None) -> str:
    style = style or RenderStyle()
    if isinstance(sol, CanonicalSolution):
        sol = sol.representative
    validate(sol, region)
    b = region.bounds
    w = (b.width + 2 * style.margin) * style.scale
    h = (b.height + 2 * style.margin) * style.scale
    return _svg(w, h, _panel(sol, region, style, 0, 0))


def render_sheet_svg(solutions: Sequence[Solution | CanonicalSolution], region: Region,
                     columns: int = 4, style: RenderStyle | None = None) -> str:
    """Grid of partitions, row-major, each labeled with its 1-based index.

    Canonical solutions are laid out in key order; plain solutions in the
    order given.
    """
    style = style or RenderStyle()
    if not solutions:
        raise ValueError("cannot render an empty sheet")
    if columns < 1:
        raise ValueError("columns must be positive")
    if all(isinstance(s, CanonicalSolution) for s in solutions):
        sols = [c.representative for c in sorted(solutions, key=lambda c: c.key)]
    else:
        sols = [s.representative if isinstance(s, CanonicalSolution) else s for s in solutions]
    b = region.bounds
    label_h = style.scale // 2 if style.labels else 0
    pw = (b.width + 2 * style.margin) * style.scale
    ph = (b.height + 2 * style.margin) * style.scale + label_h
    rows = -(-len(sols) // columns)
    body = []
    for i, sol in enumerate(sols):
        validate(sol, region)
        r, c = divmod(i, columns)
        ox, oy = c * pw, r * ph
        body.append(f'<g class="panel" id="panel-{i + 1}">')
        if style.labels:
            body.append(f'<text x="{_num(ox + pw / 2)}" y="{_num(oy + label_h)}" '
                        f'text-anchor="middle" font-family="sans-serif" '
                        f'font-size="{_num(label_h * 0.8)}">{i + 1}</text>')
        body += _panel(sol, region, style, ox, oy + label_h)
        body.append("</g>")
    return _svg(columns * pw if rows > 1 else len(sols) * pw, rows * ph, body)


def render_shape_catalog(entries: Sequence, coverable: Mapping[str, Mapping[str, bool]] | None = None,
                         columns: int = 5, style: RenderStyle | None = None) -> str:
    """Outline every census shape with its region key and shape number.

    ``coverable`` maps a region key to {"japanese": bool, "chinese": bool};
    shapes get a J and/or C badge accordingly.
    """
    style = style or RenderStyle(scale=20)
    coverable = coverable or {}
    s = style.scale
    mw = max(e.region.bounds.width for e in entries)
    mh = max(e.region.bounds.height for e in entries)
    pw = (mw + 2) * s
    text_h = 3 * s // 2
    ph = (mh + 2) * s + text_h
    body = []
    for i, e in enumerate(entries):
        r, c = divmod(i, columns)
        ox, oy = c * pw, r * ph
        b = e.region.bounds
        canvas = _Canvas(style, 2 * (b.y0 + b.height))
        x0, y0 = ox + s - b.x0 * s, oy + s
        title = f"J{e.number:02d}" if e.number else "unnumbered"
        badges = "".join(t for kind, t in (("japanese", "J"), ("chinese", "C"))
                         if coverable.get(e.key, {}).get(kind))
        body.append(f'<g class="shape" id="shape-{i + 1}" data-key="{escape(e.key)}">')
        body.append(f'<path class="outline" d="{canvas.path(outline2(e.region.cells), x0, y0)}" '
                    f'fill="#dddddd" stroke="#222222" stroke-width="{_num(style.stroke_width)}"/>')
        ty = oy + (mh + 2) * s
        body.append(f'<text class="title" x="{_num(ox + s)}" y="{_num(ty)}" font-family="sans-serif" '
                    f'font-size="{_num(s * 0.7)}">{title} [{badges}]</text>')
        body.append(f'<text class="key" x="{_num(ox + s)}" y="{_num(ty + s * 0.7)}" '
                    f'font-family="monospace" font-size="{_num(s * 0.35)}">{escape(e.key)}</text>')
        body.append("</g>")
    rows = -(-len(entries) // columns)
    return _svg(columns * pw, rows * ph, body)

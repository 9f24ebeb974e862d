"""SVG pictures of regions and tilings.

Unit side is 20 user units and up triangles point up on the page.  Holes
(cells enclosed by the region but not in it) are filled black, and lozenge
positions of weight 1/2 carry a shaded core.
"""
from __future__ import annotations

import math
from html import escape

from .lattice import DOWN, SQRT3_2, Cell, Region, lozenge_kind

SIDE = 20.0
PAD = 10.0
KIND_FILL = {"vertical": "#f2d388", "left": "#9cc3e6", "right": "#c7e3b1"}


def _point(p):
    u, v = p
    return SIDE * (u + v / 2), -SIDE * SQRT3_2 * v


def _fmt(x: float) -> str:
    s = f"{x:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _poly(pts, **attrs) -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
    extra = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return f'<polygon points="{coords}"{extra}/>'


def enclosed_holes(region: Region) -> frozenset:
    """Cells not in the region that cannot reach the outside without crossing it."""
    cells = region.cells
    if not cells:
        return frozenset()
    us = [c.u for c in cells]
    vs = [c.v for c in cells]
    lo_u, hi_u, lo_v, hi_v = min(us) - 1, max(us) + 1, min(vs) - 1, max(vs) + 1

    def inside(c: Cell):
        return lo_u <= c.u <= hi_u and lo_v <= c.v <= hi_v

    box = {Cell(u, v, o) for u in range(lo_u, hi_u + 1) for v in range(lo_v, hi_v + 1) for o in "UD"}
    start = Cell(lo_u, lo_v, "U")
    seen, stack = {start}, [start]
    while stack:
        c = stack.pop()
        for d in c.neighbors():
            if inside(d) and d not in cells and d not in seen:
                seen.add(d)
                stack.append(d)
    return frozenset(box - cells - seen)


def _lozenge_points(loz):
    up, down = loz
    pts = list(dict.fromkeys(up.corners() + down.corners()))
    # order the four corners around their centroid
    cx = sum(_point(p)[0] for p in pts) / 4
    cy = sum(_point(p)[1] for p in pts) / 4
    pts.sort(key=lambda p: math.atan2(_point(p)[1] - cy, _point(p)[0] - cx))
    return [_point(p) for p in pts], (cx, cy)


def region_svg(region: Region, tiling=None) -> str:
    """SVG document for ``region``, optionally with one tiling drawn on it."""
    holes = enclosed_holes(region)
    every = list(region.cells | holes)
    if every:
        xs = [_point(p)[0] for c in every for p in c.corners()]
        ys = [_point(p)[1] for c in every for p in c.corners()]
        x0, y0, x1, y1 = min(xs) - PAD, min(ys) - PAD, max(xs) + PAD, max(ys) + PAD
    else:
        x0 = y0 = 0.0
        x1 = y1 = 2 * PAD
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{_fmt(x0)} {_fmt(y0)} '
           f'{_fmt(x1 - x0)} {_fmt(y1 - y0)}" width="{_fmt(x1 - x0)}" height="{_fmt(y1 - y0)}">']
    out.append(f"<title>{escape(region.label)}</title>")
    for c in sorted(region.cells):
        out.append(_poly([_point(p) for p in c.corners()], fill="white" if c.orient == DOWN else "#fafafa",
                         stroke="#bbbbbb", stroke_width="0.5"))
    for c in sorted(holes):
        out.append(_poly([_point(p) for p in c.corners()], fill="black", stroke="black", stroke_width="0.5"))
    if tiling is not None:
        for loz in sorted(tiling):
            pts, _ = _lozenge_points(loz)
            out.append(_poly(pts, fill=KIND_FILL[lozenge_kind(loz)], stroke="black", stroke_width="1"))
    for loz, w in sorted(region.weights.items()):
        if w == 1:
            continue
        pts, (cx, cy) = _lozenge_points(loz)
        core = [(cx + 0.35 * (x - cx), cy + 0.35 * (y - cy)) for x, y in pts]
        out.append(_poly(core, fill="#777777", fill_opacity="0.8", stroke="none"))
    out.append("</svg>")
    return "\n".join(out) + "\n"

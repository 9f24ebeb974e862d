"""Unit triangles, lozenges and regions on the triangular lattice.

Lattice points are integer pairs ``(u, v)`` meaning ``u*e1 + v*e2`` with
``e1`` horizontal and ``e2`` at 60 degrees.  ``Up(u, v)`` is the triangle with
corners ``(u, v), (u+1, v), (u, v+1)``; ``Down(u, v)`` has corners
``(u+1, v), (u, v+1), (u+1, v+1)``.  Row ``v`` is the horizontal strip between
heights ``v`` and ``v+1``.

Points that are not lattice points (rotation centres, centroids) are kept in
"thirds": integer pairs equal to three times the oblique coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import sqrt
from typing import Iterable, NamedTuple

UP = "U"
DOWN = "D"

# unit steps, counter-clockwise from east
DIRECTIONS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
SQRT3_2 = sqrt(3) / 2


class Cell(NamedTuple):
    u: int
    v: int
    orient: str

    @property
    def is_up(self) -> bool:
        return self.orient == UP

    def neighbors(self) -> tuple["Cell", "Cell", "Cell"]:
        u, v = self.u, self.v
        if self.orient == UP:
            return (Cell(u - 1, v, DOWN), Cell(u, v, DOWN), Cell(u, v - 1, DOWN))
        return (Cell(u, v, UP), Cell(u + 1, v, UP), Cell(u, v + 1, UP))

    def thirds(self) -> tuple[int, int]:
        """Centroid in thirds."""
        if self.orient == UP:
            return 3 * self.u + 1, 3 * self.v + 1
        return 3 * self.u + 2, 3 * self.v + 2

    def xy(self) -> tuple[float, float]:
        """Cartesian centroid (unit side length)."""
        tu, tv = self.thirds()
        return (tu + tv / 2) / 3, tv * SQRT3_2 / 3

    def corners(self) -> tuple[tuple[int, int], ...]:
        u, v = self.u, self.v
        if self.orient == UP:
            return (u, v), (u + 1, v), (u, v + 1)
        return (u + 1, v), (u + 1, v + 1), (u, v + 1)


def Up(u: int, v: int) -> Cell:
    return Cell(u, v, UP)


def Down(u: int, v: int) -> Cell:
    return Cell(u, v, DOWN)


def cell_at_thirds(tu: int, tv: int) -> Cell:
    ru, rv = tu % 3, tv % 3
    if ru == 1 and rv == 1:
        return Cell((tu - 1) // 3, (tv - 1) // 3, UP)
    if ru == 2 and rv == 2:
        return Cell((tu - 2) // 3, (tv - 2) // 3, DOWN)
    raise ValueError(f"({tu}/3, {tv}/3) is not a cell centroid")


def lozenge(a: Cell, b: Cell) -> tuple[Cell, Cell]:
    """Canonical lozenge id: ``(up_cell, down_cell)``."""
    up, down = (a, b) if a.orient == UP else (b, a)
    if up.orient != UP or down.orient != DOWN or down not in up.neighbors():
        raise ValueError(f"{a} and {b} do not form a lozenge")
    return up, down


def lozenge_kind(loz: tuple[Cell, Cell]) -> str:
    """'vertical', 'left' or 'right' according to the shared edge.

    'left' lozenges lean to the left (shared edge runs at 60 degrees),
    'right' lozenges lean to the right (shared edge at 120 degrees).
    """
    up, down = loz
    if down.v == up.v - 1:
        return "vertical"
    if down.u == up.u - 1:
        return "left"
    return "right"


# --- polygons ----------------------------------------------------------------


def walk(start: tuple[int, int], steps: Iterable[int]) -> list[tuple[int, int]]:
    """Vertices visited by a lattice path of unit steps (direction indices)."""
    u, v = start
    pts = [(u, v)]
    for d in steps:
        du, dv = DIRECTIONS[d]
        u, v = u + du, v + dv
        pts.append((u, v))
    return pts


def sides(*segments: tuple[str | int, int]) -> list[int]:
    """Expand ``(pattern, repeats)`` pairs into a step list.

    ``pattern`` is a string of direction digits, e.g. ``("21", 3)`` is a
    vertical zig-zag of six unit steps.
    """
    out: list[int] = []
    for pattern, reps in segments:
        out.extend(int(c) for c in str(pattern) * reps)
    return out


def polygon_cells(start: tuple[int, int], steps: Iterable[int]) -> frozenset[Cell]:
    """Cells whose centroid is enclosed by a closed lattice path."""
    pts = walk(start, steps)
    if pts[0] != pts[-1]:
        raise ValueError(f"boundary path does not close: ends at {pts[-1]}")
    if len(pts) < 4:
        return frozenset()
    us = [p[0] for p in pts]
    vs = [p[1] for p in pts]
    edges = list(zip(pts, pts[1:]))
    cells = set()
    for v in range(min(vs), max(vs)):
        for orient, off in ((UP, 1), (DOWN, 2)):
            cv = 3 * v + off
            # crossings of the horizontal line through the centroids, in thirds
            xs = []
            for (u1, v1), (u2, v2) in edges:
                if (3 * v1 > cv) != (3 * v2 > cv):
                    # u at height cv along the edge, scaled by 3*(v2-v1)
                    num = 3 * u1 * (v2 - v1) + (cv - 3 * v1) * (u2 - u1)
                    xs.append(Fraction(num, v2 - v1))
            xs.sort()
            for lo, hi in zip(xs[::2], xs[1::2]):
                for u in range(min(us) - 1, max(us) + 1):
                    cu = 3 * u + off
                    if lo < cu < hi:
                        cells.add(Cell(u, v, orient))
    return frozenset(cells)


def up_triangle(u: int, v: int, side: int) -> frozenset[Cell]:
    """Cells of the up-pointing triangle with lower-left corner ``(u, v)``."""
    out = set()
    for j in range(side):
        for i in range(side - j):
            out.add(Up(u + i, v + j))
            if i < side - j - 1:
                out.add(Down(u + i, v + j))
    return frozenset(out)


def down_triangle(u: int, v: int, side: int) -> frozenset[Cell]:
    """Cells of the down-pointing triangle with upper-left corner ``(u, v)``."""
    out = set()
    for j in range(side):
        row = v - 1 - j
        for p in range(u + j, u + side):
            out.add(Down(p, row))
            if p > u + j:
                out.add(Up(p, row))
    return frozenset(out)


# --- regions -----------------------------------------------------------------

Lozenge = tuple  # (up Cell, down Cell)


class SymmetryError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Region:
    """A finite set of cells with optional lozenge weights (default 1).

    ``center`` is a 120-degree rotation centre in thirds; ``axis`` is twice
    the Cartesian abscissa of a vertical mirror line.  Either may be None.
    ``forced`` is the product of weights of lozenges removed while building.
    """

    cells: frozenset
    weights: dict = field(default_factory=dict)
    label: str = ""
    center: tuple | None = None
    axis: int | None = None
    forced: Fraction = Fraction(1)

    def __post_init__(self):
        for loz, w in self.weights.items():
            if loz[0] not in self.cells or loz[1] not in self.cells:
                raise ValueError(f"weighted lozenge {loz} leaves the region")
            if w <= 0:
                raise ValueError(f"non-positive weight {w} on {loz}")

    def __eq__(self, other):
        if not isinstance(other, Region):
            return NotImplemented
        return self.cells == other.cells and self.weights == other.weights

    def __len__(self):
        return len(self.cells)

    def weight(self, loz) -> Fraction:
        return self.weights.get(loz, Fraction(1))

    def lozenges(self):
        """All lozenge positions inside the region, in a fixed order."""
        out = []
        for c in sorted(self.cells):
            if c.orient == UP:
                for d in c.neighbors():
                    if d in self.cells:
                        out.append((c, d))
        return out

    def counts(self) -> tuple[int, int]:
        ups = sum(1 for c in self.cells if c.orient == UP)
        return ups, len(self.cells) - ups

    def with_cells(self, cells, label=None) -> "Region":
        cells = frozenset(cells)
        w = {k: x for k, x in self.weights.items() if k[0] in cells and k[1] in cells}
        return Region(cells, w, self.label if label is None else label,
                      self.center, self.axis, self.forced)

    def translated(self, du: int, dv: int) -> "Region":
        def t(c):
            return Cell(c.u + du, c.v + dv, c.orient)
        center = None if self.center is None else (self.center[0] + 3 * du, self.center[1] + 3 * dv)
        axis = None if self.axis is None else self.axis + 2 * du + dv
        return Region(frozenset(map(t, self.cells)),
                      {(t(a), t(b)): w for (a, b), w in self.weights.items()},
                      self.label, center, axis, self.forced)


def is_balanced(region: Region) -> bool:
    ups, downs = region.counts()
    return ups == downs


def _rot_thirds(p, c):
    # 120 degrees counter-clockwise about c: (u, v) -> (-u - v, u)
    du, dv = p[0] - c[0], p[1] - c[1]
    return c[0] - du - dv, c[1] + du


def _refl_thirds(p, axis):
    # mirror in the vertical line X = axis/2; in thirds u' = 3*axis - u - v
    return 3 * axis - p[0] - p[1], p[1]


def axis_of_center(center) -> int:
    """``axis`` value of the vertical line through a point given in thirds."""
    twice_x = Fraction(2 * center[0] + center[1], 3)
    if twice_x.denominator != 1:
        raise SymmetryError(f"no lattice mirror through {center}")
    return int(twice_x)


def rotate_cell(cell: Cell, center) -> Cell:
    return cell_at_thirds(*_rot_thirds(cell.thirds(), center))


def reflect_cell(cell: Cell, axis: int) -> Cell:
    return cell_at_thirds(*_refl_thirds(cell.thirds(), axis))


def _region_center(region: Region):
    if region.center is None:
        raise SymmetryError(f"region {region.label!r} has no rotation centre")
    return region.center


def _region_axis(region: Region) -> int:
    if region.axis is not None:
        return region.axis
    if region.center is not None:
        return axis_of_center(region.center)
    raise SymmetryError(f"region {region.label!r} has no vertical symmetry axis")


def _map_region(region: Region, f) -> Region:
    w = {lozenge(f(a), f(b)): x for (a, b), x in region.weights.items()}
    return Region(frozenset(map(f, region.cells)), w, region.label,
                  region.center, region.axis, region.forced)


def rotate120(obj, center=None):
    """Rotate a Region, Cell, or tiling (set of lozenges) by 120 degrees.

    Regions use their own centre; cells and tilings need ``center``.
    """
    if isinstance(obj, Region):
        c = _region_center(obj)
        return _map_region(obj, lambda x: rotate_cell(x, c))
    if center is None:
        raise SymmetryError("rotation needs a centre")
    if isinstance(obj, Cell):
        return rotate_cell(obj, center)
    return frozenset(lozenge(rotate_cell(a, center), rotate_cell(b, center)) for a, b in obj)


def reflect_vertical(obj, axis=None):
    """Mirror a Region, Cell, or tiling in a vertical line."""
    if isinstance(obj, Region):
        m = _region_axis(obj)
        return _map_region(obj, lambda x: reflect_cell(x, m))
    if axis is None:
        raise SymmetryError("reflection needs an axis")
    if isinstance(obj, Cell):
        return reflect_cell(obj, axis)
    return frozenset(lozenge(reflect_cell(a, axis), reflect_cell(b, axis)) for a, b in obj)


def region_axis(region: Region) -> int:
    return _region_axis(region)


# --- text format ---------------------------------------------------------------


def dumps(region: Region) -> str:
    lines = [f"label {region.label}"]
    if region.center is not None:
        lines.append(f"center {region.center[0]} {region.center[1]}")
    if region.axis is not None:
        lines.append(f"axis {region.axis}")
    for c in sorted(region.cells):
        lines.append(f"cell {c.u} {c.v} {c.orient}")
    for (a, b), w in sorted(region.weights.items()):
        lines.append(f"weight {a.u} {a.v} {a.orient} {b.u} {b.v} {b.orient} {w.numerator}/{w.denominator}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> Region:
    label, center, axis = "", None, None
    cells, weights = set(), {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        parts = rest.split()
        try:
            if key == "label":
                label = rest.strip()
            elif key == "center":
                center = (int(parts[0]), int(parts[1]))
            elif key == "axis":
                axis = int(parts[0])
            elif key == "cell":
                cells.add(Cell(int(parts[0]), int(parts[1]), parts[2]))
            elif key == "weight":
                a = Cell(int(parts[0]), int(parts[1]), parts[2])
                b = Cell(int(parts[3]), int(parts[4]), parts[5])
                weights[lozenge(a, b)] = Fraction(parts[6])
            else:
                raise ValueError(f"unknown record {key!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    for c in cells:
        if c.orient not in (UP, DOWN):
            raise ValueError(f"bad orientation in {c}")
    return Region(frozenset(cells), weights, label, center, axis)

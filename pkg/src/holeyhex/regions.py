"""Constructors for the region families: hexagons, four-hole hexagons, and
the one-sixth and one-third pieces they decompose into."""
from __future__ import annotations

from fractions import Fraction

from .lattice import (Down, Region, Up, is_balanced, lozenge, polygon_cells,
                      reflect_cell, rotate_cell, sides, up_triangle, walk)

HALF = Fraction(1, 2)


def _nonneg(**kw):
    for k, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"{k} must be a non-negative integer, got {v!r}")


def hexagon(a: int, b: int, c: int) -> Region:
    """Semi-regular hexagon with sides a, b, c, a, b, c clockwise from the
    northwest; the west vertex sits at the origin."""
    _nonneg(a=a, b=b, c=c)
    if a == b == c == 0:
        raise ValueError("hexagon needs a positive side")
    steps = sides(("1", a), ("0", b), ("5", c), ("4", a), ("3", b), ("2", c))
    cells = polygon_cells((0, 0), steps)
    center = None
    if a == b == c:
        # regular: the centroid of the cells is a lattice point
        n = len(cells)
        center = (sum(x.thirds()[0] for x in cells) // n, sum(x.thirds()[1] for x in cells) // n)
    return Region(cells, label=f"H_{{{a},{b},{c}}}", center=center)


def holey_hexagon(t: int, y: int, a: int, x: int, variant: str = "H", gap: int | None = None) -> Region:
    """Hexagon of sides L, t, L, t, L, t (L = t + x + 3a) with a central
    up-triangle of side x and three satellite up-triangles of side a.

    ``H``: satellites beyond the sides of the central hole (towards the
    southern, northeastern and northwestern sides of the hexagon), ``gap``
    rows away; default 2y.  ``Hbar``: satellites beyond the corners of the
    central hole (towards the northern, southwestern and southeastern sides);
    the default puts the apex of each satellite 2y + 2a - 2 rows beyond the
    facing corner of the central hole, i.e. a gap of 2y + a - 2 rows.  The southern (resp. northern) satellite is
    centred on the vertical line through the centre; when parities forbid
    that (H with odd x) it is shifted half a unit to the west.
    """
    _nonneg(t=t, y=y, a=a, x=x)
    if variant not in ("H", "Hbar"):
        raise ValueError(f"unknown variant {variant!r}")
    L = t + x + 3 * a
    if L == 0 and t == 0:
        return Region(frozenset(), label=f"{variant}_{{0,{y}}}({a},{x})", center=(0, 0))
    steps = sides(("1", L), ("0", t), ("5", L), ("4", t), ("3", L), ("2", t))
    outer = polygon_cells((0, 0), steps)
    center = (3 * t + x + 3 * a, x + 3 * a)
    holes = set(up_triangle(t + a, a, x))
    if a > 0:
        if variant == "H":
            d = 2 * y if gap is None else gap
            # apex at height a - d, on the vertical through the centre
            sat = up_triangle((2 * t + 2 * a + x + d) // 2, -d, a)
        else:
            d = 2 * y + a - 2 if gap is None else gap
            # base at height a + x + d, bisected by the vertical through the centre
            sat = up_triangle((2 * t + a - d) // 2, a + x + d, a)
        for cell in sat:
            r1 = rotate_cell(cell, center)
            holes.update((cell, r1, rotate_cell(r1, center)))
    if not holes <= outer:
        raise ValueError(f"holes leave the hexagon for t={t}, y={y}, a={a}, x={x}")
    cells = outer - holes
    label = f"{'H' if variant == 'H' else 'Hbar'}_{{{t},{y}}}({a},{x})"
    return Region(frozenset(cells), label=label, center=center)


# --- pentagons and their boundary lozenges ---------------------------------------


class _Outline:
    """A closed lattice path from the northwest corner, each step tagged by the
    side it belongs to ('N', 'NE', 'hole', 'SE', 'S', 'W')."""

    def __init__(self):
        self.steps: list[int] = []
        self.tags: list[str] = []

    def add(self, tag: str, pattern: str, reps: int = 1):
        for d in sides((pattern, max(reps, 0))):
            self.steps.append(d)
            self.tags.append(tag)
        return self

    def points(self):
        return walk((0, 0), self.steps)

    def cells(self) -> frozenset:
        return polygon_cells((0, 0), self.steps)

    def west_lozenges(self, tag: str = "W") -> list:
        """Vertical lozenges in the bumps of a western zig-zag, bottom to top.

        A bump is a step at 120 degrees followed by a step at 60 degrees; its
        apex ``q`` is the lower-left corner of the upper (Up) triangle."""
        pts = self.points()
        n = len(self.steps)
        out = []
        for i in range(n):
            j = (i + 1) % n
            if self.steps[i] == 2 and self.steps[j] == 1 and self.tags[i] == tag and self.tags[j] == tag:
                qu, qv = pts[i + 1]
                out.append((Up(qu, qv), Down(qu, qv - 1)))
        return out

    def northeast_lozenges(self, tag: str = "NE") -> list:
        """Lozenges on the steps at 300 degrees of the northeastern side, top to
        bottom: the Up triangle under the step with the Down triangle on its left."""
        pts = self.points()
        out = []
        for i, d in enumerate(self.steps):
            if d == 5 and self.tags[i] == tag:
                u, v = pts[i]
                out.append((Up(u, v - 1), Down(u - 1, v - 1)))
        return out

    def west_ups(self, tag: str = "W") -> list:
        """Up triangles along the western side (right of each 60-degree step), top to bottom."""
        pts = self.points()
        out = [Up(*pts[i]) for i, d in enumerate(self.steps) if d == 1 and self.tags[i] == tag]
        return out[::-1]

    def northeast_ups(self, tag: str = "NE") -> list:
        pts = self.points()
        return [Up(pts[i][0], pts[i][1] - 1) for i, d in enumerate(self.steps) if d == 5 and self.tags[i] == tag]


def _pentagon(north: int, ne: int, se: int, w: int) -> _Outline:
    """Pentagon with northern side ``north``, a northeastern zig-zag with ``ne``
    steps down, southeastern side ``se``, and a western zig-zag with ``w`` bumps.
    The southern side is fixed by closure."""
    south = north + ne - 1 + (ne - se) // 2
    o = _Outline().add("N", "0", north)
    if ne > 0:
        o.add("NE", "5").add("NE", "05", ne - 1)
    return o.add("SE", "4", se).add("S", "3", south).add("W", "21", w)


def _weighted(outline: _Outline, cells, west: bool, northeast: bool, west_loz=None, ne_loz=None) -> dict:
    w = {}
    if west:
        for loz in (outline.west_lozenges() if west_loz is None else west_loz):
            w[loz] = HALF
    if northeast:
        for loz in (outline.northeast_lozenges() if ne_loz is None else ne_loz):
            w[loz] = HALF
    return {loz: x for loz, x in w.items() if loz[0] in cells and loz[1] in cells}


def _finish(cells, weights, label, reduce: bool = True) -> Region:
    """Balance check plus forced-lozenge cleanup; the removed weight is kept in ``forced``."""
    region = Region(frozenset(cells), weights, label)
    if not is_balanced(region):
        ups, downs = region.counts()
        raise ValueError(f"{label}: {ups} up and {downs} down triangles; construction is unbalanced")
    if not reduce:
        return region
    from .dualgraph import reduce_region

    red, factor, dead = reduce_region(region)
    if dead:
        return region
    return Region(red.cells, red.weights, label, forced=factor)


def _flags(west: bool, northeast: bool) -> str:
    return ("_*" if west else "") + ("^*" if northeast else "")


def g_region(n: int, x: int, west_half: bool = False, northeast_half: bool = False) -> Region:
    """Pentagon with north side x, south side x + n - 1, southeastern side n,
    and western and northeastern zig-zags of n steps each.

    ``west_half`` puts weight 1/2 on the n vertical lozenges in the bumps of
    the western zig-zag; ``northeast_half`` on the lozenges along the
    northeastern zig-zag."""
    _nonneg(n=n, x=x)
    label = f"G{_flags(west_half, northeast_half)}_{{{n},{x}}}"
    if n == 0:
        return Region(frozenset(), label=label)
    o = _pentagon(x, n, n, n)
    cells = o.cells()
    return _finish(cells, _weighted(o, cells, west_half, northeast_half), label, reduce=False)


def _r_outline(x, y, z, a) -> _Outline:
    # western side, bottom to top: z bumps, the semi-triangular hole, y bumps
    n = y + z
    o = _Outline().add("N", "0", x)
    if n + 2 * a > 0:
        o.add("NE", "5").add("NE", "05", n + 2 * a - 1)
    o.add("SE", "4", n).add("S", "3", x + n + 3 * a - 1)
    return o.add("W", "21", z).add("hole", "0", a).add("hole", "2", 2 * a).add("W", "21", y)


def r_region(x: int, y: int, z: int, a: int, west_half: bool = False, northeast_half: bool = False) -> Region:
    """The pentagon with sides x, y+z+2a, y+z, x+y+z+3a-1 and a western
    zig-zag, with a semi-triangular hole of side a cut into the western side
    below its first y bumps.

    This is the shape left after removing the (y+1)-st to (y+a)-th up
    triangles of the western side and the lozenges they force.  Weighted
    variants put 1/2 on the vertical lozenges of the western bumps and/or on
    the lozenges along the northeastern zig-zag."""
    _nonneg(x=x, y=y, z=z, a=a)
    label = f"R{_flags(west_half, northeast_half)}_{{{x},{y},{z}}}({a})"
    if y + z + a == 0:
        return Region(frozenset(), label=label)
    o = _r_outline(x, y, z, a)
    cells = o.cells()
    return _finish(cells, _weighted(o, cells, west_half, northeast_half), label)


def _e_outline(x, y, z, a) -> _Outline:
    # northeastern side, top to bottom: y+a-1 steps, the hole, z steps
    o = _Outline().add("N", "0", x)
    before = y + a - 1
    if a == 0:
        if y + z - 1 > 0:
            o.add("NE", "5").add("NE", "05", y + z - 2)
    else:
        if before > 0:
            o.add("NE", "5").add("NE", "05", before - 1)
        # without a step before it the hole starts right at the corner
        o.add("hole", "4", a).add("hole", "0", 2 * a - (before == 0))
        o.add("NE", "05", z)
    return (o.add("SE", "4", y + z - 1).add("S", "3", x + y + z + 3 * a - 2)
            .add("W", "21", y + z + a - 1))


def e_region(x: int, y: int, z: int, a: int, west_half: bool = False, northeast_half: bool = False) -> Region:
    """The pentagon with sides y+z+a-1 (western zig-zag), x, y+z+2a-1, y+z-1,
    x+y+z+3a-2, with a semi-triangular hole of side a cut into the
    northeastern side after its first y+a-1 steps (the shape left by removing
    the (y+a)-th to (y+2a-1)-th up triangles there and the forced lozenges).
    """
    _nonneg(x=x, y=y, z=z, a=a)
    if y + z < 1:
        raise ValueError("E-regions need y + z >= 1")
    label = f"E{_flags(west_half, northeast_half)}_{{{x},{y},{z}}}({a})"
    if y + z + a == 1:
        return Region(frozenset(), label=label)
    o = _e_outline(x, y, z, a)
    cells = o.cells()
    return _finish(cells, _weighted(o, cells, west_half, northeast_half), label)


def f_region(x: int, y: int, z: int, a: int) -> Region:
    """Mixed region F: pentagon with sides x-1, y+z+2a, y+z, x+y+z+3a-2, with a
    western side made of z bumps weighted 1/2, a semi-triangular hole of
    side a, and y bumps whose vertical lozenges have been removed."""
    _nonneg(x=x, y=y, z=z, a=a)
    if x < 1:
        raise ValueError("F-regions need x >= 1")
    label = f"F_{{{x},{y},{z}}}({a})"
    if y + z + a == 0:
        return Region(frozenset(), label=label)
    n = y + z
    o = _Outline().add("N", "0", x - 1)
    if n + 2 * a > 0:
        o.add("NE", "5").add("NE", "05", n + 2 * a - 1)
    o.add("SE", "4", n).add("S", "3", x + n + 3 * a - 2).add("W", "21", z)
    if a > 0:
        o.add("hole", "2").add("hole", "0", a).add("hole", "2", 2 * a - 1)
    o.add("Wcut", "12", y)
    cells = o.cells()
    return _finish(cells, _weighted(o, cells, True, False), label)


def fbar_region(x: int, y: int, z: int, a: int) -> Region:
    """Mixed region F-bar: pentagon with sides x, y+z+2a+1, y+z+1,
    x+y+z+3a+1 whose western side has z unweighted cut bumps below a
    semi-triangular hole of side a and y bumps above it; the lozenges above
    the hole on the western side and all northeastern lozenges weigh 1/2."""
    _nonneg(x=x, y=y, z=z, a=a)
    label = f"Fbar_{{{x},{y},{z}}}({a})"
    n = y + z
    o = _Outline().add("N", "0", x).add("NE", "50", n + 2 * a + 1)
    o.add("SE", "4", n + 1).add("S", "3", x + n + 3 * a + 1)
    o.add("Wlow", "1").add("Wlow", "21", z).add("hole", "0", a).add("hole", "2", 2 * a + 1)
    o.add("W", "21", y)
    cells = o.cells()
    return _finish(cells, _weighted(o, cells, True, True), label)


# --- one-third pieces of the Hbar hexagon ------------------------------------------

CD_VARIANTS = ("C", "Cbar", "D", "Dbar")


def c_d_regions(x: int, y: int, z: int, a: int, variant: str) -> Region:
    """Mirror-symmetric thirds of the Hbar hexagon, built by doubling an E-region.

    ``C`` doubles E_{x+1,y,z}(a) across its northeastern side (turned to be
    vertical), so the satellite hole sits on the axis; ``D`` doubles
    E_{x,y,z}(a) across its western zig-zag.  The axis runs through the
    lozenges of the doubled side.  The barred variants weight the lozenges
    along the northwestern and northeastern boundary 1/2 (the images of the
    E-region's other weighted side).  The vertical axis is stored on the region.
    """
    _nonneg(x=x, y=y, z=z, a=a)
    if variant not in CD_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {CD_VARIANTS}")
    if y < 1:
        # with y = 0 the hole reaches the corner and its mirror leaves an unpaired axis cell
        raise ValueError("C/D regions need y >= 1")
    label = f"{variant}_{{{x},{y},{z}}}({a})"
    if y + z + a == 1:
        return Region(frozenset(), label=label)
    on_ne = variant.startswith("C")
    o = _e_outline(x + 1 if on_ne else x, y, z, a)
    base = o.cells()
    if on_ne:
        # a 120 degree turn makes the northeastern side vertical
        turn = lambda c: rotate_cell(c, (0, 0))
        mirror_loz, outer_loz = o.northeast_lozenges(), o.west_lozenges()
    else:
        turn = lambda c: c
        mirror_loz, outer_loz = o.west_lozenges(), o.northeast_lozenges()
    cells = {turn(c) for c in base}
    axes = {2 * up.u + up.v + 1 for up, _ in (lozenge(turn(p), turn(q)) for p, q in mirror_loz)}
    if len(axes) != 1:
        raise AssertionError(f"{label}: doubled side is not straight ({sorted(axes)})")
    m = axes.pop()
    cells |= {reflect_cell(c, m) for c in cells}
    cells = frozenset(cells)
    weights = {}
    if variant.endswith("bar"):
        for p, q in outer_loz:
            loz = lozenge(turn(p), turn(q))
            if loz[0] in cells and loz[1] in cells:
                weights[loz] = HALF
                weights[lozenge(reflect_cell(loz[0], m), reflect_cell(loz[1], m))] = HALF
    region = Region(cells, weights, label, axis=m)
    if not is_balanced(region):
        ups, downs = region.counts()
        raise ValueError(f"{label}: {ups} up and {downs} down triangles; construction is unbalanced")
    return region

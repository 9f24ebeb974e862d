"""Rotation-invariant tilings: a direct orbit-by-orbit enumerator, the orbit
graph of the 120-degree rotation, and the factorization of graphs with a
vertical mirror axis."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .dualgraph import MatchGraph, build_dual
from .lattice import (SQRT3_2, UP, Region, SymmetryError, axis_of_center,
                      lozenge, reflect_cell, rotate_cell)
from .matcher import BRUTE_FORCE_CAP, CapError

SYMMETRIC_CAP = 400


@dataclass(frozen=True)
class SymmetricCount:
    cs: Fraction
    cstc: Fraction
    total: Fraction | None = None


def _center(region: Region):
    if region.center is None:
        raise SymmetryError(f"region {region.label!r} has no rotation centre")
    return region.center


def _fixed_cell(region: Region):
    c = _center(region)
    for cell in region.cells:
        if cell.thirds() == tuple(c):
            return cell
    return None


def count_symmetric(region: Region, cap: int = SYMMETRIC_CAP, with_total: bool = False) -> SymmetricCount:
    """Weighted counts of tilings fixed by the rotation, and by rotation and
    the vertical reflection together.

    Lozenges are placed a whole symmetry orbit at a time, so only symmetric
    tilings are ever built; ``with_total`` adds a plain enumeration of all
    tilings (within the brute-force cap).
    """
    if len(region.cells) > cap:
        raise CapError(f"{len(region.cells)} cells exceed the symmetric-count cap of {cap}")
    c = _center(region)
    rot = lambda cell: rotate_cell(cell, c)
    cs = _orbit_count(region, [rot])
    try:
        m = region.axis if region.axis is not None else axis_of_center(c)
        refl = lambda cell: reflect_cell(cell, m)
        mirror_ok = all(refl(x) in region.cells for x in region.cells)
    except SymmetryError:
        mirror_ok = False
    cstc = _orbit_count(region, [rot, refl]) if mirror_ok else Fraction(0)
    total = None
    if with_total:
        from .matcher import brute_force_mgf
        total = brute_force_mgf(build_dual(region), cap=BRUTE_FORCE_CAP)
    return SymmetricCount(cs, cstc, total)


def _closure(loz, gens):
    """All images of a lozenge under the group generated by ``gens``."""
    seen = {loz}
    stack = [loz]
    while stack:
        a, b = stack.pop()
        for g in gens:
            img = lozenge(g(a), g(b))
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return seen


def _orbit_count(region: Region, gens) -> Fraction:
    cells = region.cells
    order = sorted(cells, key=lambda c: (c.v, c.thirds()[0]))
    free = set(cells)
    total = Fraction(0)
    cache = {}

    def images(loz):
        if loz not in cache:
            cache[loz] = _closure(loz, gens)
        return cache[loz]

    def go(acc: Fraction):
        nonlocal total
        x = next((c for c in order if c in free), None)
        if x is None:
            total += acc
            return
        for y in x.neighbors():
            if y not in free:
                continue
            orbit = images(lozenge(x, y))
            used = set()
            ok = True
            for a, b in orbit:
                if a in used or b in used or a not in free or b not in free:
                    ok = False
                    break
                used.add(a)
                used.add(b)
            if not ok:
                continue
            w = Fraction(1)
            for loz in orbit:
                w *= region.weight(loz)
            free.difference_update(used)
            go(acc * w)
            free.update(used)

    go(Fraction(1))
    return total


# --- orbit graph -------------------------------------------------------------


def _in_sector(d) -> bool:
    """Offset (in thirds) has polar angle in [30, 150) degrees."""
    du, dv = d
    return dv >= du and 2 * dv + du > 0


def _tripled(d) -> tuple[float, float]:
    """Position after tripling the polar angle about 90 degrees."""
    du, dv = d
    x, y = (du + dv / 2) / 3, dv * SQRT3_2 / 3
    r = math.hypot(x, y)
    th = 3 * (math.atan2(y, x) - math.pi / 2) + math.pi / 2
    return r * math.cos(th), r * math.sin(th)


def orbit_graph(graph_or_region, center=None) -> MatchGraph:
    """Quotient of a rotation-invariant dual graph by the 120-degree rotation.

    Each orbit is represented by its cell in the sector between 30 and 150
    degrees about ``center``; parallel edges between two orbits are kept.
    The drawing triples angles about the vertical, so the images of the
    region's vertical mirror line land on the vertical line ``X = 0``.
    """
    if isinstance(graph_or_region, Region):
        center = _center(graph_or_region) if center is None else center
        graph = build_dual(graph_or_region)
    else:
        graph = graph_or_region
        if center is None:
            raise SymmetryError("orbit graph needs a rotation centre")
    verts = set(graph.vertices)
    for v in graph.vertices:
        if v.thirds() == tuple(center):
            raise SymmetryError(f"rotation fixes the cell {v}; the action is not free")
        if rotate_cell(v, center) not in verts:
            raise SymmetryError(f"graph is not rotation invariant: image of {v} missing")

    def rep(cell):
        for _ in range(3):
            d = (cell.thirds()[0] - center[0], cell.thirds()[1] - center[1])
            if _in_sector(d):
                return cell
            cell = rotate_cell(cell, center)
        raise AssertionError("no orbit representative")

    reps = [v for v in graph.vertices if rep(v) == v]
    color = {v: graph.color[v] for v in reps}
    pos = {v: _tripled((v.thirds()[0] - center[0], v.thirds()[1] - center[1])) for v in reps}
    edges = []
    # each edge orbit has exactly one member whose first endpoint is a representative
    for a, b, w in graph.edges:
        if rep(a) == a:
            edges.append((a, rep(b), w))
    reps.sort(key=lambda v: (-pos[v][1], pos[v][0]))
    return MatchGraph(tuple(reps), color, tuple(edges), pos)


# --- factorization -------------------------------------------------------------

AXIS_EPS = 1e-9


@dataclass
class Factorization:
    plus: MatchGraph   # left of the axis
    minus: MatchGraph  # right of the axis
    k: int
    axis_vertices: list


def ciucu_factorize(graph: MatchGraph, axis: float = 0.0) -> Factorization:
    """Split a mirror-symmetric bipartite planar graph along its vertical axis.

    Edges lying on the axis get half their weight; with the topmost axis
    vertex black, black ``a_i`` and white ``b_j`` lose their edges to the
    left, white ``a_i`` and black ``b_j`` lose those to the right.  Then
    M(graph) = 2^k M(plus) M(minus), where 2k is the number of axis vertices.
    """
    side = {}
    on_axis = []
    for v in graph.vertices:
        x = graph.pos[v][0] - axis
        if abs(x) < AXIS_EPS:
            on_axis.append(v)
        else:
            side[v] = -1 if x < 0 else 1
    if len(on_axis) % 2:
        raise SymmetryError(f"{len(on_axis)} vertices on the axis; need an even number")
    on_axis.sort(key=lambda v: -graph.pos[v][1])
    for a, b, _ in graph.edges:
        if a in side and b in side and side[a] != side[b]:
            raise SymmetryError(f"axis vertices are not a cut set: edge {a}-{b} crosses")
    if not on_axis:
        k = 0
    else:
        k = len(on_axis) // 2
        black = graph.color[on_axis[0]]
        for i, v in enumerate(on_axis):
            is_a = i % 2 == 0
            is_black = graph.color[v] == black
            # black a / white b keep only their right edges
            side[v] = 1 if is_a == is_black else -1
    axis_set = set(on_axis)
    edges = []
    for a, b, w in graph.edges:
        if a in axis_set and b in axis_set:
            if side[a] != side[b]:
                raise SymmetryError(f"axis edge {a}-{b} joins the two halves")
            edges.append((a, b, w / 2))
        elif side[a] == side[b]:
            edges.append((a, b, w))
    halved = MatchGraph(graph.vertices, graph.color, tuple(edges), graph.pos)
    plus = halved.subgraph(v for v in graph.vertices if side[v] < 0)
    minus = halved.subgraph(v for v in graph.vertices if side[v] > 0)
    return Factorization(plus, minus, k, on_axis)

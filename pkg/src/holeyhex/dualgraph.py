"""Weighted bipartite dual graphs of regions, and the surgeries used on them."""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .lattice import DOWN, UP, Cell, Region, lozenge


@dataclass(frozen=True, eq=False)
class MatchGraph:
    """Bipartite graph with exact edge weights and a planar drawing.

    ``color`` maps each vertex to 0 (first class, up triangles) or 1.
    ``pos`` gives planar coordinates; the cyclic order of neighbours
    around a vertex is read off from it.  Parallel edges are allowed.
    """

    vertices: tuple
    color: dict
    edges: tuple  # (a, b, weight) with color[a] == 0
    pos: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.vertices)

    def adjacency(self) -> dict:
        adj = defaultdict(list)
        for a, b, w in self.edges:
            adj[a].append((b, w))
            adj[b].append((a, w))
        return adj

    def classes(self) -> tuple[list, list]:
        v1 = [x for x in self.vertices if self.color[x] == 0]
        v2 = [x for x in self.vertices if self.color[x] == 1]
        return v1, v2

    def subgraph(self, keep) -> "MatchGraph":
        keep = set(keep)
        verts = tuple(x for x in self.vertices if x in keep)
        return MatchGraph(verts, {x: self.color[x] for x in verts},
                          tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
                          {x: self.pos[x] for x in verts if x in self.pos})

    def components(self) -> list["MatchGraph"]:
        adj = self.adjacency()
        seen, out = set(), []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y, _ in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(self.subgraph(comp))
        return out

    def faces(self) -> list[list]:
        """Vertex cycles of the faces of the straight-line drawing ``pos``."""
        adj = defaultdict(set)
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        order = {}
        for x, nbrs in adj.items():
            px, py = self.pos[x]
            order[x] = sorted(nbrs, key=lambda y: math.atan2(self.pos[y][1] - py, self.pos[y][0] - px))
        seen, faces = set(), []
        for a in adj:
            for b in adj[a]:
                if (a, b) in seen:
                    continue
                face, x, y = [], a, b
                while (x, y) not in seen:
                    seen.add((x, y))
                    face.append(x)
                    around = order[y]
                    # next half-edge: turn to the neighbour just clockwise of x
                    i = around.index(x)
                    x, y = y, around[i - 1]
                faces.append(face)
        return faces

    def dump(self) -> str:
        lines = []
        for x in self.vertices:
            lines.append(f"vertex {x} class {self.color[x] + 1}")
        for a, b, w in self.edges:
            lines.append(f"edge {a} {b} {w.numerator}/{w.denominator}")
        return "\n".join(lines) + "\n"


def build_dual(region: Region) -> MatchGraph:
    cells = sorted(region.cells, key=lambda c: (c.v, c.thirds()[0] + c.thirds()[1] / 2))
    color = {c: (0 if c.orient == UP else 1) for c in cells}
    edges = []
    for c in cells:
        if c.orient != UP:
            continue
        for d in c.neighbors():
            if d in region.cells:
                edges.append((c, d, region.weight((c, d))))
    return MatchGraph(tuple(cells), color, tuple(edges), {c: c.xy() for c in cells})


def remove_vertices(graph: MatchGraph, cells) -> MatchGraph:
    cells = set(cells)
    unknown = cells.difference(graph.vertices)
    if unknown:
        raise KeyError(f"not vertices of the graph: {sorted(unknown)}")
    return graph.subgraph(x for x in graph.vertices if x not in cells)


@dataclass
class Reduction:
    graph: MatchGraph
    factor: Fraction
    unmatchable: bool = False  # a vertex was left with no partner: M = 0
    forced: list = field(default_factory=list)


def remove_forced(graph: MatchGraph) -> Reduction:
    """Strip degree-1 vertices with their partners until none remain.

    M(graph) == factor * M(reduced graph); if some vertex ends with degree 0
    the reduction is flagged unmatchable (M = 0).
    """
    alive = set(graph.vertices)
    adj = graph.adjacency()
    factor = Fraction(1)
    forced = []

    def degree(x):
        return sum(1 for y, _ in adj[x] if y in alive)

    queue = [x for x in graph.vertices if degree(x) <= 1]
    while queue:
        x = queue.pop()
        if x not in alive:
            continue
        live = [(y, w) for y, w in adj[x] if y in alive]
        if not live:
            return Reduction(graph.subgraph(alive), Fraction(0), True, forced)
        partners = {y for y, _ in live}
        if len(partners) > 1:
            continue
        y = live[0][0]
        w = sum((w for _, w in live), Fraction(0))  # parallel edges add up
        factor *= w
        forced.append((x, y, w))
        alive.discard(x)
        alive.discard(y)
        for z, _ in adj[y]:
            if z in alive and degree(z) <= 1:
                queue.append(z)
    return Reduction(graph.subgraph(alive), factor, False, forced)


def reduce_region(region: Region) -> tuple[Region, Fraction, bool]:
    """Region-level forced-lozenge removal: ``(reduced, factor, unmatchable)``."""
    red = remove_forced(build_dual(region))
    return region.with_cells(red.graph.vertices), red.factor, red.unmatchable


class SplitError(ValueError):
    pass


def split_at_subregion(region: Region, sub) -> tuple[Region, Region]:
    """Split off a subregion Q whose tilings never cross its boundary.

    Q must be balanced and every cell of Q meeting a cell of R - Q must point
    the same way; then no lozenge straddles the cut in any tiling and
    M(R) = M(Q) * M(R - Q).
    """
    sub = frozenset(sub)
    if not sub <= region.cells:
        raise SplitError("subregion is not contained in the region")
    q = region.with_cells(sub)
    rest = region.with_cells(region.cells - sub)
    ups, downs = q.counts()
    if ups != downs:
        raise SplitError(f"condition (2) fails: subregion has {ups} up and {downs} down triangles")
    # condition (1): every cell of Q that shares an edge with R - Q points the
    # same way, so a lozenge crossing the cut would always take the same kind
    # of triangle out of Q; balance of Q then rules such lozenges out.
    kinds = {}
    for c in sub:
        for d in c.neighbors():
            if d in rest.cells:
                kinds.setdefault(c.orient, []).append(_edge_line(c, d))
    if len(kinds) > 1:
        lines = sorted(set(kinds[UP]))[:3], sorted(set(kinds[DOWN]))[:3]
        raise SplitError(f"condition (1) fails: cut has both up and down triangles of Q (lines {lines})")
    return q, rest


def _edge_line(a: Cell, b: Cell):
    """The lattice line carrying the edge shared by adjacent cells."""
    up, down = lozenge(a, b)
    if down.v == up.v - 1:  # horizontal edge at height up.v
        return ("h", up.v)
    if down.u == up.u - 1:  # edge at 60 degrees: u constant
        return ("u", up.u)
    return ("s", up.u + up.v + 1)  # edge at 120 degrees: u + v constant

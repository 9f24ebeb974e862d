"""Exact matching generating functions.

``mgf`` is the engine: vertices are swept in a fixed geometric order and a
dynamic program tracks which vertices ahead of the sweep are already
matched.  ``brute_force_mgf`` and ``enumerate_tilings`` are a deliberately
naive backtracking oracle sharing no code with the engine.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from .dualgraph import MatchGraph, build_dual
from .lattice import Region

DEFAULT_MAX_FRONTIER = 48
DEFAULT_MAX_STATES = 2_000_000
BRUTE_FORCE_CAP = 60


class FrontierError(RuntimeError):
    """The sweep needs more live vertices than allowed."""

    def __init__(self, required: int, limit: int):
        super().__init__(f"frontier width {required} exceeds the maximum {limit}")
        self.required = required
        self.limit = limit


class StateLimitError(RuntimeError):
    pass


class CapError(RuntimeError):
    pass


def sweep_order(graph: MatchGraph, axis: int = 0) -> list:
    """Vertices sorted along one of three sweep directions (0, 60, 120 deg)."""
    import math

    ang = math.radians(90 + 60 * axis)
    ca, sa = math.cos(ang), math.sin(ang)

    def key(x):
        px, py = graph.pos.get(x, (0.0, 0.0))
        # primary: distance along the sweep direction; rows become frontiers
        return (round(px * ca + py * sa, 6), round(px * sa - py * ca, 6))

    return sorted(graph.vertices, key=key)


def frontier_width(graph: MatchGraph, order: list) -> int:
    index = {x: i for i, x in enumerate(order)}
    # number of vertices j >= i with an edge reaching back before i
    first_back = {}
    for a, b, _ in graph.edges:
        i, j = sorted((index[a], index[b]))
        first_back[j] = min(first_back.get(j, j), i)
    width, events = 0, []
    for j, i in first_back.items():
        if i < j:
            events.append((i + 1, 1))
            events.append((j + 1, -1))
    events.sort()
    cur = 0
    for _, d in events:
        cur += d
        width = max(width, cur)
    return width


def mgf(graph_or_region, *, axis: int = 0, order=None,
        max_frontier: int = DEFAULT_MAX_FRONTIER,
        max_states: int = DEFAULT_MAX_STATES) -> Fraction:
    """Sum over perfect matchings of the product of edge weights."""
    graph = build_dual(graph_or_region) if isinstance(graph_or_region, Region) else graph_or_region
    n = len(graph.vertices)
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    v1, v2 = graph.classes()
    if len(v1) != len(v2):
        return Fraction(0)
    order = list(order) if order is not None else sweep_order(graph, axis)
    width = frontier_width(graph, order)
    if width > max_frontier:
        raise FrontierError(width, max_frontier)

    # integer weights over a common denominator; every matching has n/2 edges
    den = 1
    for _, _, w in graph.edges:
        den = lcm(den, Fraction(w).denominator)
    index = {x: i for i, x in enumerate(order)}
    forward = [[] for _ in range(n)]
    for a, b, w in graph.edges:
        i, j = index[a], index[b]
        if i > j:
            i, j = j, i
        iw = Fraction(w) * den
        forward[i].append((j - i, iw.numerator))

    states = {0: 1}
    for i in range(n):
        nxt: dict[int, int] = {}
        fw = forward[i]
        for s, val in states.items():
            if s & 1:
                t = s >> 1
                nxt[t] = nxt.get(t, 0) + val
                continue
            for off, w in fw:
                bit = 1 << off
                if s & bit:
                    continue
                t = (s | bit) >> 1
                nxt[t] = nxt.get(t, 0) + val * w
        states = nxt
        if not states:
            return Fraction(0)
        if len(states) > max_states:
            raise StateLimitError(f"{len(states)} profile states at vertex {i} of {n}")
    return Fraction(states.get(0, 0), den ** (n // 2))


# --- oracle ------------------------------------------------------------------


def _check_cap(n: int, cap: int):
    if n > cap:
        raise CapError(f"{n} vertices exceed the brute-force cap of {cap}")


def brute_force_mgf(graph: MatchGraph, cap: int = BRUTE_FORCE_CAP) -> Fraction:
    """Sum of matching weights by plain backtracking."""
    _check_cap(len(graph.vertices), cap)
    adj = graph.adjacency()
    verts = list(graph.vertices)
    total = Fraction(0)

    def go(free: set, acc: Fraction):
        nonlocal total
        if not free:
            total += acc
            return
        x = min(free, key=verts.index)
        for y, w in adj[x]:
            if y in free:
                free.discard(x)
                free.discard(y)
                go(free, acc * w)
                free.add(x)
                free.add(y)

    go(set(verts), Fraction(1))
    return total


def enumerate_tilings(region: Region, cap: int = BRUTE_FORCE_CAP):
    """Yield every tiling (frozenset of lozenges) exactly once, lazily."""
    _check_cap(len(region.cells), cap)
    yield from _tilings(region)


def _tilings(region: Region):
    cells = region.cells
    order = sorted(cells, key=lambda c: (c.v, c.thirds()[0] + c.thirds()[1] / 2))
    free = set(cells)
    chosen = []

    def go():
        if not free:
            yield frozenset(chosen)
            return
        x = next(c for c in order if c in free)
        for y in x.neighbors():
            if y in free:
                loz = (x, y) if x.is_up else (y, x)
                free.discard(x)
                free.discard(y)
                chosen.append(loz)
                yield from go()
                chosen.pop()
                free.add(x)
                free.add(y)

    yield from go()


def tiling_weight(region: Region, tiling) -> Fraction:
    w = Fraction(1)
    for loz in tiling:
        w *= region.weight(loz)
    return w

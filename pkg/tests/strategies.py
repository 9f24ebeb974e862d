"""Shared hypothesis strategies: small lattice regions and parameter tuples."""
from hypothesis import strategies as st

from holeyhex.lattice import Cell, Region, is_balanced, lozenge
from holeyhex.regions import e_region, g_region, hexagon, r_region
from fractions import Fraction


@st.composite
def blob_regions(draw, max_cells=24):
    """Connected-ish random cell sets grown from one triangle, then balanced
    by dropping surplus cells of the majority orientation."""
    n = draw(st.integers(2, max_cells))
    cells = [Cell(0, 0, "U")]
    seen = set(cells)
    for _ in range(4 * n):
        if len(seen) >= n:
            break
        base = draw(st.sampled_from(sorted(seen)))
        nxt = draw(st.sampled_from(base.neighbors()))
        if nxt not in seen:
            seen.add(nxt)
    ups = sorted(c for c in seen if c.orient == "U")
    downs = sorted(c for c in seen if c.orient == "D")
    k = min(len(ups), len(downs))
    cells = frozenset(ups[:k] + downs[:k])
    region = Region(cells)
    weights = {}
    for loz in region.lozenges():
        if draw(st.integers(0, 5)) == 0:
            weights[loz] = draw(st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(2)]))
    return Region(cells, weights, "blob")


small_hexagons = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)).filter(lambda t: any(t))


@st.composite
def family_regions(draw):
    kind = draw(st.sampled_from(["hexagon", "g", "r", "e"]))
    if kind == "hexagon":
        return hexagon(*draw(small_hexagons))
    w, ne = draw(st.booleans()), draw(st.booleans())
    if kind == "g":
        return g_region(draw(st.integers(0, 4)), draw(st.integers(0, 3)), w, ne)
    x, y, z, a = (draw(st.integers(0, 2)) for _ in range(4))
    if kind == "r":
        return r_region(x, y, z, a, w, ne)
    return e_region(x, y + 1, z, a, w, ne)

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from holeyhex.lattice import (Cell, Down, Region, SymmetryError, Up, dumps, is_balanced, loads,
                              lozenge, lozenge_kind, reflect_cell, reflect_vertical, rotate120,
                              rotate_cell)
from holeyhex.dualgraph import reduce_region
from holeyhex.regions import (c_d_regions, e_region, f_region, fbar_region, g_region, hexagon,
                              holey_hexagon, r_region)
from holeyhex.verify import region_value

cells = st.builds(Cell, st.integers(-20, 20), st.integers(-20, 20), st.sampled_from("UD"))


def test_adjacency_rule():
    assert set(Down(2, 3).neighbors()) == {Up(2, 3), Up(3, 3), Up(2, 4)}
    for up in Down(2, 3).neighbors():
        assert Down(2, 3) in up.neighbors()


@given(cells)
def test_neighbours_share_exactly_one_edge(c):
    for d in c.neighbors():
        assert d.orient != c.orient
        assert len(set(c.corners()) & set(d.corners())) == 2


def test_lozenge_rejects_non_adjacent():
    with pytest.raises(ValueError):
        lozenge(Up(0, 0), Down(5, 5))
    assert lozenge(Down(0, 0), Up(1, 0)) == (Up(1, 0), Down(0, 0))
    assert lozenge_kind((Up(0, 1), Down(0, 0))) == "vertical"


@pytest.mark.parametrize("abc,n", [((1, 1, 1), 6), ((2, 2, 2), 24), ((0, 1, 1), 2), ((2, 3, 4), 52)])
def test_hexagon_cell_counts(abc, n):
    a, b, c = abc
    h = hexagon(a, b, c)
    assert len(h.cells) == n == (a + b + c) ** 2 - a * a - b * b - c * c
    assert is_balanced(h)


def test_hexagon_rejects_bad_sides():
    with pytest.raises(ValueError):
        hexagon(-1, 1, 1)
    with pytest.raises(ValueError):
        hexagon(0, 0, 0)


def test_region_weights_must_be_inside_and_positive():
    with pytest.raises(ValueError):
        Region(frozenset([Up(0, 0)]), {(Up(0, 0), Down(0, 0)): Fraction(1, 2)})
    with pytest.raises(ValueError):
        Region(frozenset([Up(0, 0), Down(0, 0)]), {(Up(0, 0), Down(0, 0)): Fraction(0)})


def test_region_equality_ignores_label():
    a = hexagon(1, 1, 1)
    assert a == Region(a.cells, {}, "something else")


# rotation centres: lattice points and triangle centroids, in thirds
centres = st.one_of(st.tuples(st.integers(-9, 9), st.integers(-9, 9)).map(lambda p: (3 * p[0], 3 * p[1])),
                    cells.map(lambda c: c.thirds()))


@given(cells, centres)
def test_rotation_has_order_three(c, center):
    assert rotate_cell(rotate_cell(rotate_cell(c, center), center), center) == c
    assert rotate_cell(c, center).orient == c.orient


@given(cells, st.integers(-9, 9))
def test_reflection_is_an_involution(c, axis):
    assert reflect_cell(reflect_cell(c, axis), axis) == c
    assert reflect_cell(c, axis).orient == c.orient


def test_symmetry_ops_need_a_centre():
    with pytest.raises(SymmetryError):
        rotate120(g_region(2, 2))
    with pytest.raises(SymmetryError):
        rotate120(Up(0, 0))


@pytest.mark.parametrize("variant", ["H", "Hbar"])
@pytest.mark.parametrize("t,y,a,x", [(5, 1, 2, 2), (4, 1, 1, 0), (6, 2, 2, 3), (3, 0, 0, 0), (6, 1, 3, 1)])
def test_holey_hexagons_are_rotation_invariant(variant, t, y, a, x):
    h = holey_hexagon(t, y, a, x, variant)
    assert rotate120(h).cells == h.cells
    assert is_balanced(h)


@pytest.mark.parametrize("variant", ["H", "Hbar"])
def test_holey_hexagon_mirror(variant):
    h = holey_hexagon(5, 1, 2, 2, variant)
    assert reflect_vertical(h).cells == h.cells


def test_holey_hexagon_without_holes_is_a_hexagon():
    for t in range(1, 4):
        assert holey_hexagon(t, 1, 0, 0).cells == hexagon(t, t, t).cells


def test_g_region_examples():
    assert len(g_region(0, 3).cells) == 0
    assert region_value(g_region(1, 4)) == 5
    assert len(g_region(6, 4, True, True).weights) == 12


@pytest.mark.parametrize("x,y,z", list(itertools.product(range(3), range(3), range(3))))
def test_r_region_without_hole_is_a_pentagon(x, y, z):
    if y + z == 0:
        return
    r, g = r_region(x, y, z, 0), g_region(y + z, x)
    # r is stored after forced-lozenge removal; g is not
    red, factor, _ = reduce_region(g)
    assert r.cells == red.cells
    assert region_value(r) == region_value(g)


def test_degenerate_r_region_is_empty():
    r = r_region(1, 0, 0, 0, True, True)
    assert not r.cells and region_value(r) == 1


@pytest.mark.parametrize("x,y,a", list(itertools.product(range(3), range(1, 3), range(3))))
def test_e_region_with_z_zero_reduces_to_pentagon(x, y, a):
    e, g = e_region(x, y, 0, a), g_region(y + a - 1, x)
    assert region_value(e) == region_value(g)
    assert len(e.cells) == len(reduce_region(g)[0].cells)


@pytest.mark.parametrize("x,z,a", list(itertools.product(range(1, 4), range(1, 3), range(3))))
def test_f_region_with_y_zero(x, z, a):
    f, g = f_region(x, 0, z, a), g_region(z, x + 3 * a - 1, True, False)
    assert region_value(f) == region_value(g)
    assert len(f.cells) == len(reduce_region(g)[0].cells)


@pytest.mark.parametrize("x,z,a", list(itertools.product(range(3), range(1, 3), range(3))))
def test_fbar_region_with_y_zero(x, z, a):
    f, g = fbar_region(x, 0, z, a), g_region(z, x + 3 * a + 1, False, True)
    # 2a + 1 forced lozenges of weight 1/2 come off (one fewer when x = 0)
    assert f.forced == Fraction(1, 2 ** (2 * a + (x > 0)))
    assert region_value(f) / f.forced == region_value(g)
    assert len(f.cells) == len(g.cells)


def test_f_region_rejects_x_zero():
    with pytest.raises(ValueError):
        f_region(0, 1, 1, 1)


def test_e_region_rejects_empty_sides():
    with pytest.raises(ValueError):
        e_region(1, 0, 0, 1)


@pytest.mark.parametrize("build", [
    lambda: r_region(4, 2, 3, 2), lambda: f_region(4, 4, 3, 2), lambda: fbar_region(3, 2, 3, 2),
    lambda: e_region(4, 2, 3, 2), lambda: e_region(4, 2, 3, 2, True, True),
])
def test_figure_regions_balanced(build):
    assert is_balanced(build())


@pytest.mark.parametrize("variant", ["C", "Cbar", "D", "Dbar"])
@pytest.mark.parametrize("p", [(0, 1, 1, 1), (1, 2, 1, 2), (2, 1, 0, 1)])
def test_c_d_regions_mirror_symmetric(variant, p):
    r = c_d_regions(*p, variant)
    assert reflect_vertical(r) == r  # cells and weights both map onto themselves


@given(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2),
       st.booleans(), st.booleans())
def test_families_balanced(x, y, z, a, w, ne):
    assert is_balanced(r_region(x, y, z, a, w, ne))
    assert is_balanced(fbar_region(x, y, z, a))
    if x >= 1:
        assert is_balanced(f_region(x, y, z, a))
    if y + z >= 1:
        assert is_balanced(e_region(x, y, z, a, w, ne))


@given(st.integers(1, 4), st.integers(0, 4))
def test_weighted_positions_lie_on_their_sides(n, x):
    west = g_region(n, x, True, False)
    ne = g_region(n, x, False, True)
    # western lozenges are vertical; north-eastern ones share an edge at 60 degrees
    assert all(lozenge_kind(l) == "vertical" for l in west.weights)
    assert all(lozenge_kind(l) == "left" for l in ne.weights)
    min_u = min(c.u + c.v / 2 for c in west.cells)
    assert all(l[0].u + l[0].v / 2 - min_u < 1 for l in west.weights)


def test_text_format_round_trip():
    r = holey_hexagon(3, 1, 1, 0, "H")
    s = dumps(r)
    back = loads(s)
    assert back == r and back.center == r.center and back.label == r.label
    w = g_region(3, 2, True, True)
    assert loads(dumps(w)) == w


def test_text_format_errors_name_the_line():
    with pytest.raises(ValueError, match="line 2"):
        loads("label x\nbogus 1 2\n")

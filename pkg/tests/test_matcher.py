from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from holeyhex.dualgraph import MatchGraph, build_dual, remove_vertices
from holeyhex.lattice import Down, Region, Up
from holeyhex.matcher import (CapError, FrontierError, brute_force_mgf, enumerate_tilings, mgf,
                              sweep_order, tiling_weight)
from holeyhex.regions import g_region, hexagon

from strategies import blob_regions, family_regions


def test_small_values():
    assert mgf(build_dual(Region(frozenset()))) == 1
    assert mgf(hexagon(2, 2, 2)) == 20
    assert mgf(g_region(1, 4)) == 5


def test_single_half_edge():
    g = MatchGraph((Up(0, 0), Down(0, -1)), {Up(0, 0): 0, Down(0, -1): 1},
                   ((Up(0, 0), Down(0, -1), Fraction(1, 2)),))
    assert brute_force_mgf(g) == mgf(g) == Fraction(1, 2)


def test_unit_hexagon_has_two_tilings():
    tilings = list(enumerate_tilings(hexagon(1, 1, 1)))
    assert len(tilings) == 2 == len(set(tilings))


def test_doubly_weighted_pentagon_oracle():
    g = build_dual(g_region(2, 2, True, True))
    assert brute_force_mgf(g) == mgf(g)


def test_caps():
    with pytest.raises(CapError):
        brute_force_mgf(build_dual(hexagon(4, 4, 4)))
    with pytest.raises(FrontierError) as e:
        mgf(hexagon(6, 6, 6), max_frontier=4)
    assert e.value.required > 4


@given(family_regions())
def test_oracle_equivalence_on_families(region):
    g = build_dual(region)
    if len(g) <= 60:
        assert mgf(g) == brute_force_mgf(g)


@given(blob_regions())
def test_oracle_equivalence_on_random_regions(region):
    g = build_dual(region)
    assert mgf(g) == brute_force_mgf(g)
    tilings = list(enumerate_tilings(region))
    assert len(set(tilings)) == len(tilings)
    assert sum(tiling_weight(region, t) for t in tilings) == mgf(g)


@given(family_regions(), st.integers(1, 2))
def test_sweep_direction_does_not_matter(region, axis):
    assert mgf(region, axis=axis) == mgf(region, axis=0)


@given(blob_regions(), st.data())
def test_edge_decomposition(region, data):
    g = build_dual(region)
    if not g.edges:
        return
    i = data.draw(st.integers(0, len(g.edges) - 1))
    a, b, w = g.edges[i]
    c = data.draw(st.sampled_from([Fraction(1, 3), Fraction(5, 2), Fraction(7)]))
    scaled = MatchGraph(g.vertices, g.color, g.edges[:i] + ((a, b, w * c),) + g.edges[i + 1:], g.pos)
    without = MatchGraph(g.vertices, g.color, g.edges[:i] + g.edges[i + 1:], g.pos)
    with_edge = w * mgf(remove_vertices(g, [a, b]))
    # matchings through the edge scale by c, the rest stay put
    assert mgf(g) == with_edge + mgf(without)
    assert mgf(scaled) == c * with_edge + mgf(without)


def test_disconnected_graph_is_a_product():
    a = hexagon(2, 1, 2)
    b = g_region(2, 1, True, False).translated(20, 0)
    both = Region(a.cells | b.cells, dict(b.weights))
    assert mgf(both) == mgf(a) * mgf(b)


def test_odd_or_unbalanced_graphs_have_no_matching():
    assert mgf(Region(frozenset([Up(0, 0)]))) == 0
    assert mgf(Region(frozenset([Up(0, 0), Up(3, 3)]))) == 0


def test_sweep_order_is_a_permutation():
    g = build_dual(hexagon(2, 3, 2))
    for axis in range(3):
        assert sorted(sweep_order(g, axis)) == sorted(g.vertices)

import random
from fractions import Fraction

import pytest

from holeyhex import verify as vf
from holeyhex.dualgraph import build_dual, remove_vertices
from holeyhex.lattice import Up
from holeyhex.matcher import mgf
from holeyhex.regions import e_region, r_region


def test_report_line_format():
    r = vf.CheckReport("x", {"a": 1, "b": 2}, Fraction(3, 2), Fraction(3, 2), True, 0.0012)
    assert r.line() == "x a=1,b=2 3/2 3/2 pass 1.2"
    bad = vf.CheckReport("y", {}, Fraction(1), Fraction(2), False, 0.0, "why")
    assert bad.line() == "y - 1 2 FAIL 0.0 # why"


def test_summary_counts():
    reps = [vf.CheckReport("a", {}, 1, 1, True, 0.0), vf.CheckReport("a", {}, 1, 2, False, 0.0),
            vf.CheckReport("b", {}, 1, 1, True, 0.0)]
    s = vf.summary(reps)
    assert (s["checks"], s["passed"], s["failed"]) == (3, 2, 1)
    assert s["by_name"]["a"] == {"checks": 2, "passed": 1}
    assert vf.format_reports(reps).splitlines()[-1].startswith("# summary {")


# --- Kuo -------------------------------------------------------------------------


def test_r_band_instance_terms_are_r_regions():
    inst = vf.r_kuo_instance(1, 1, 1, 1)
    rep = vf.kuo_check(inst.graph, inst.u, inst.v, inst.w, inst.s)
    assert rep.passed
    for cut, params in inst.terms.items():
        assert mgf(remove_vertices(inst.graph, cut)) == vf.region_value(r_region(*params)), (cut, params)


@pytest.mark.parametrize("p", [(0, 1, 1, 1), (0, 2, 1, 2), (1, 2, 2, 1)])
def test_r_band_instances(p):
    inst = vf.r_kuo_instance(*p)
    assert vf.kuo_check(inst.graph, inst.u, inst.v, inst.w, inst.s).passed


def test_r_band_needs_positive_parameters():
    with pytest.raises(ValueError):
        vf.r_kuo_instance(1, 0, 1, 1)


@pytest.mark.parametrize("seed", range(6))
def test_random_instances(seed):
    rng = random.Random(seed)
    region = e_region(1, 2, 1, 1) if seed % 2 else r_region(0, 1, 2, 1)
    inst = vf.random_kuo_instance(region, rng)
    assert vf.kuo_check(inst.graph, inst.u, inst.v, inst.w, inst.s).passed


def test_kuo_preconditions():
    g = build_dual(r_region(0, 1, 1, 1))          # balanced: classes differ by zero
    ups = sorted(c for c in g.color if c.orient == "U")
    downs = sorted(c for c in g.color if c.orient == "D")
    with pytest.raises(vf.KuoPreconditionError, match="V1"):
        vf.kuo_check(g, ups[0], ups[1], ups[2], downs[0])
    inst = vf.r_kuo_instance(0, 1, 1, 1)
    with pytest.raises(vf.KuoPreconditionError, match="wrong vertex class"):
        vf.kuo_check(inst.graph, inst.s, inst.v, inst.w, inst.s)
    with pytest.raises(vf.KuoPreconditionError, match="distinct"):
        vf.kuo_check(inst.graph, inst.u, inst.u, inst.w, inst.s)
    with pytest.raises(vf.KuoPreconditionError, match="not a vertex"):
        vf.kuo_check(inst.graph, Up(99, 99), inst.v, inst.w, inst.s)


def test_cyclic_order():
    face = list("abcdef")
    assert vf._in_cyclic_order(face, "bcdf")
    assert vf._in_cyclic_order(face, "fdcb")        # reversed orientation
    assert vf._in_cyclic_order(face, "dfab")
    assert not vf._in_cyclic_order(face, "acbd")
    assert not vf._in_cyclic_order(face, "abcz")


# --- recurrences -------------------------------------------------------------------


def test_formula_recurrences():
    assert vf.recurrence_check("R", (1, 1, 2, 1)).passed
    assert vf.recurrence_check("Rw", (2, 1, 2, 1)).passed
    assert vf.recurrence_check("E", (1, 2, 1, 1), errata=True).passed


def test_matcher_recurrences():
    assert vf.recurrence_check("E", (1, 2, 1, 1), side="matcher").passed
    assert vf.recurrence_check("F", (1, 1, 2, 1), side="matcher").passed
    assert vf.recurrence_check("R", (0, 1, 1, 1), side="matcher").passed


def test_recurrence_scope():
    with pytest.raises(vf.OutOfScope):
        vf.recurrence_check("F", (1, 1, 1, 1))
    with pytest.raises(vf.OutOfScope):
        vf.recurrence_check("E", (1, 1, 1, 1))
    with pytest.raises(vf.OutOfScope):
        vf.recurrence_check("Q", (1, 1, 1, 1))
    with pytest.raises(ValueError):
        vf.recurrence_terms("R", (1, 1, 1, 1), side="both")


def test_f_formula_fails_only_at_a_zero():
    # the F product vanishes at a = 0 for tileable regions, so its recurrence breaks there
    assert vf.recurrence_check("F", (2, 1, 2, 1)).passed
    assert not vf.recurrence_check("F", (2, 1, 2, 0)).passed
    assert vf.recurrence_check("F", (2, 1, 2, 0), side="matcher").passed


# --- theorem sweeps -------------------------------------------------------------------


def test_t42_sweep_passes():
    reps = vf.theorem_sweep("T42")
    assert reps and all(r.passed for r in reps)


def test_lemma_sweep_fails_only_for_doubly_weighted_x0():
    reps = vf.theorem_sweep("L41")
    bad = [r for r in reps if not r.passed]
    assert bad
    assert all(r.point["variant"] == "both" and r.point["x"] == 0 for r in bad)
    # the uncorrected formula is 3/2 of the true value there
    assert all(r.lhs == Fraction(3, 2) * r.rhs for r in bad if r.point["n"] > 0)


def test_cs_point():
    reps = vf.check_point("T11", dict(t=3, y=1, a=0, x=0), errata=True)
    assert {r.name for r in reps} == {"T11:orbit", "T11:filter"}
    assert all(r.passed for r in reps)


def test_cs_point_without_product():
    reps = vf.check_point("T11", dict(t=3, y=1, a=0, x=1))
    assert [r.name for r in reps] == ["T11:oracles"] and reps[0].passed


def test_sweep_order_independent_of_workers():
    grid = vf.default_grid("T42")[:6]
    key = lambda r: (r.name, r.point, r.lhs, r.rhs, r.passed, r.note)
    one = [key(r) for r in vf.theorem_sweep("T42", grid)]
    two = [key(r) for r in vf.theorem_sweep("T42", grid, workers=2)]
    assert one == two


def test_unknown_theorem():
    with pytest.raises(ValueError):
        vf.theorem_sweep("T99")

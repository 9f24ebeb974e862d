"""Exact numeric checks: Kuo condensation on concrete graphs, the three-term
recurrences of the region families (on regions and on the product formulas),
and formula-versus-count sweeps for every theorem.

Every check produces a ``CheckReport``; failures are reported, never raised.
"""
from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

from . import formulas as fm
from .dualgraph import MatchGraph, build_dual, remove_vertices
from .lattice import DOWN, UP, Down, Region, SymmetryError, Up
from .matcher import BRUTE_FORCE_CAP, brute_force_mgf, mgf
from .regions import (_r_outline, c_d_regions, e_region, f_region, fbar_region,
                      g_region, holey_hexagon, r_region)
from .symmetry import ciucu_factorize, count_symmetric, orbit_graph

FILTER_CAP = 160  # cells; the orbit-by-orbit filter count is kept below this


@dataclass(frozen=True)
class CheckReport:
    name: str
    point: dict
    lhs: Fraction
    rhs: Fraction
    passed: bool
    elapsed: float  # seconds
    note: str = ""

    def line(self) -> str:
        pt = ",".join(f"{k}={v}" for k, v in self.point.items()) or "-"
        status = "pass" if self.passed else "FAIL"
        out = f"{self.name} {pt} {_rat(self.lhs)} {_rat(self.rhs)} {status} {self.elapsed * 1000:.1f}"
        return out + (f" # {self.note}" if self.note else "")


def _rat(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _report(name, point, lhs, rhs, t0, note="") -> CheckReport:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return CheckReport(name, dict(point), lhs, rhs, lhs == rhs, time.perf_counter() - t0, note)


def summary(reports) -> dict:
    failed = [r for r in reports if not r.passed]
    by_name = {}
    for r in reports:
        c = by_name.setdefault(r.name, [0, 0])
        c[0] += 1
        c[1] += r.passed
    return {
        "checks": len(reports),
        "passed": len(reports) - len(failed),
        "failed": len(failed),
        "elapsed_ms": round(sum(r.elapsed for r in reports) * 1000, 1),
        "by_name": {k: {"checks": n, "passed": p} for k, (n, p) in sorted(by_name.items())},
    }


def format_reports(reports) -> str:
    lines = [r.line() for r in reports]
    lines.append("# summary " + json.dumps(summary(reports), sort_keys=True))
    return "\n".join(lines) + "\n"


def region_value(region: Region) -> Fraction:
    """Tiling generating function including the weight of forced lozenges."""
    return mgf(region) * region.forced


# --- Kuo condensation ----------------------------------------------------------


class KuoPreconditionError(ValueError):
    pass


def _in_cyclic_order(face: list, seq) -> bool:
    """Whether ``seq`` appears around ``face`` in this cyclic order (either orientation)."""
    pos = []
    for x in seq:
        if x not in face:
            return False
        pos.append(face.index(x))
    for p in (pos, pos[::-1]):
        k = p.index(min(p))
        rot = p[k:] + p[:k]
        if rot == sorted(rot):
            return True
    return False


def kuo_face(graph: MatchGraph, u, v, w, s):
    """A face of the stored drawing with u, v, w, s on it in this cyclic order, or None."""
    for face in graph.faces():
        if _in_cyclic_order(face, (u, v, w, s)):
            return face
    return None


def kuo_check(graph: MatchGraph, u, v, w, s, name: str = "kuo", point=None) -> CheckReport:
    """M(G-v)M(G-{u,w,s}) = M(G-u)M(G-{v,w,s}) + M(G-w)M(G-{u,v,s}).

    Requires one more vertex in the first class than in the second, u, v, w
    in the first class, s in the second, all four on a common face in this
    cyclic order.
    """
    v1, v2 = graph.classes()
    if len(v1) != len(v2) + 1:
        raise KuoPreconditionError(f"need |V1| = |V2| + 1, got {len(v1)} and {len(v2)}")
    for label, x, cls in (("u", u, 0), ("v", v, 0), ("w", w, 0), ("s", s, 1)):
        if x not in graph.color:
            raise KuoPreconditionError(f"{label} = {x} is not a vertex")
        if graph.color[x] != cls:
            raise KuoPreconditionError(f"{label} = {x} is in the wrong vertex class")
    if len({u, v, w}) < 3:
        raise KuoPreconditionError("u, v, w must be distinct")
    if kuo_face(graph, u, v, w, s) is None:
        raise KuoPreconditionError("u, v, w, s do not lie on a common face in this cyclic order")
    t0 = time.perf_counter()
    m = lambda cut: mgf(remove_vertices(graph, cut))
    lhs = m([v]) * m([u, w, s])
    rhs = m([u]) * m([v, w, s]) + m([w]) * m([u, v, s])
    return _report(name, point or {}, lhs, rhs, t0)


@dataclass
class KuoInstance:
    graph: MatchGraph
    u: object
    v: object
    w: object
    s: object
    terms: dict = field(default_factory=dict)  # removed set -> region it should equal


def _outline_corner(o, before: str, after: str):
    pts = o.points()
    for i in range(len(o.steps) - 1):
        if o.tags[i] == before and o.tags[i + 1] == after:
            return pts[i + 1]
    raise ValueError(f"no {before}/{after} corner")


def r_kuo_instance(x: int, y: int, z: int, a: int) -> KuoInstance:
    """The R-region with a band of triangles along the slanted side of its
    hole, so that one vertex more is in the first class.

    u is the lowest band triangle, v the up triangle under the north-east
    corner, w the up triangle at the corner between the north-eastern and
    south-eastern sides, and s the down triangle at the south-east corner.
    Removing them gives the six R-regions of the recurrence.
    """
    if min(y, z, a) < 1 or x < 0:
        raise ValueError("the augmented R graph needs x >= 0 and y, z, a >= 1")
    o = _r_outline(x, y, z, a)
    pts = o.points()
    band = [Up(pts[i][0] - 1, pts[i][1]) for i, (d, t) in enumerate(zip(o.steps, o.tags))
            if t == "hole" and d == 2]
    between = [Down(b.u - 1, b.v) for b in band[:-1]]
    graph = build_dual(Region(frozenset(o.cells() | set(band) | set(between))))
    q = _outline_corner(o, "NE", "SE")
    p = _outline_corner(o, "SE", "S")
    u, v, w, s = band[0], Up(x, -1), Up(q[0] - 1, q[1]), Down(p[0] - 1, p[1])
    terms = {
        (v,): (x + 3, y, z, a - 1), (u, w, s): (x, y, z - 1, a),
        (u,): (x, y, z, a), (v, w, s): (x + 3, y, z - 1, a - 1),
        (w,): (x, y + 1, z, a - 1), (u, v, s): (x + 3, y - 1, z - 1, a),
    }
    return KuoInstance(graph, u, v, w, s, terms)


def random_kuo_instance(region: Region, rng: random.Random) -> KuoInstance:
    """Add one up triangle next to the region and pick u, v, w, s on a face.

    Any choice of three first-class and one second-class vertex around a face,
    read cyclically starting after s, satisfies the order precondition.
    """
    cells = set(region.cells)
    outside = sorted({d for c in cells if c.orient == DOWN for d in c.neighbors()} - cells)
    if not outside:
        raise ValueError("region has no free up triangle on its boundary")
    extra = rng.choice(outside)
    cells.add(extra)
    graph = build_dual(region.with_cells(cells))
    faces = []
    for face in graph.faces():
        distinct = list(dict.fromkeys(face))
        ups = [c for c in distinct if c.orient == UP]
        if len(ups) >= 3 and len(distinct) > len(ups):
            faces.append(distinct)
    if not faces:
        raise ValueError("no face carries three up and one down triangle")
    # the added triangle among u, v, w keeps the six counts from being mostly zero
    faces = [f for f in faces if extra in f] or faces
    face = rng.choice(faces)
    s = rng.choice([c for c in face if c.orient == DOWN])
    k = face.index(s)
    ring = [c for c in face[k + 1:] + face[:k] if c.orient == UP]
    pick = [extra] if extra in ring else []
    pick += rng.sample([c for c in ring if c not in pick], 3 - len(pick))
    u, v, w = sorted(pick, key=ring.index)
    return KuoInstance(graph, u, v, w, s)


# --- recurrences -----------------------------------------------------------------


class OutOfScope(ValueError):
    pass


def _shape_r(x, y, z, a):
    if min(y, z, a) < 1:
        raise OutOfScope("the R recurrence needs y, z, a >= 1")
    return [(x + 3, y, z, a - 1), (x, y, z - 1, a),
            (x, y, z, a), (x + 3, y, z - 1, a - 1),
            (x, y + 1, z, a - 1), (x + 3, y - 1, z - 1, a)]


def _shape_f(x, y, z, a):
    if z <= 1:
        raise OutOfScope("the F recurrence is checked for z > 1 only; z = 1 involves regions outside this package")
    if y < 1:
        raise OutOfScope("the F recurrence needs y >= 1")
    return [(x + 3, y - 1, z, a), (x, y, z - 2, a + 1),
            (x, y, z - 1, a + 1), (x + 3, y - 1, z - 1, a),
            (x, y, z, a), (x + 3, y - 1, z - 2, a + 1)]


def _shape_e(x, y, z, a):
    if y < 2 or min(z, a) < 1:
        raise OutOfScope("the E recurrence needs y >= 2 and z, a >= 1")
    return [(x, y, z, a), (x + 3, y, z - 1, a - 1),
            (x + 3, y, z, a - 1), (x, y, z - 1, a),
            (x, y + 2, z - 1, a - 1), (x + 3, y - 2, z, a)]


def _f_region_checked(x, y, z, a):
    if x < 1:
        raise OutOfScope("F-regions need x >= 1")
    return f_region(x, y, z, a)


# family -> (shape, region builder, formula name)
FAMILIES = {
    "R": (_shape_r, lambda *p: r_region(*p), "p1"),
    "Rw": (_shape_r, lambda *p: r_region(*p, True, True), "p2"),
    "F": (_shape_f, _f_region_checked, "f1"),
    "Fbar": (_shape_f, fbar_region, "f2"),
    "E": (_shape_e, lambda *p: e_region(*p), "e1"),
    "Ew": (_shape_e, lambda *p: e_region(*p, True, True), "e2"),
    "E3w": (_shape_e, lambda *p: e_region(*p, True, False), "e3"),
}


def _formula(name: str, errata: bool):
    f = fm.FORMULAS[name]
    return partial(f, errata=errata) if name in ("e1", "e2", "e3", "e4", "k") else f


def recurrence_terms(family: str, params, side: str = "formula", errata: bool = False) -> list[Fraction]:
    if family not in FAMILIES:
        raise OutOfScope(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    shape, build, fname = FAMILIES[family]
    points = shape(*params)
    if side == "formula":
        f = _formula(fname, errata)
        return [f(*p) for p in points]
    if side == "matcher":
        return [region_value(build(*p)) for p in points]
    raise ValueError(f"side must be 'formula' or 'matcher', got {side!r}")


def recurrence_check(family: str, params, side: str = "formula", errata: bool = False) -> CheckReport:
    """The family's three-term identity T1*T2 = T3*T4 + T5*T6 at one point."""
    t0 = time.perf_counter()
    t = recurrence_terms(family, params, side, errata)
    point = dict(zip("xyza", params))
    return _report(f"rec:{family}:{side}", point, t[0] * t[1], t[2] * t[3] + t[4] * t[5], t0)


# --- theorem sweeps -----------------------------------------------------------------


THEOREMS = ("T11", "T12", "T13", "T14", "T42", "T43", "T44", "T45",
            "T46", "T47", "T48", "T49", "C410", "L41")

# product theorem -> (formula name, region builder)
_PRODUCT = {
    "T42": ("p1", lambda *p: r_region(*p)),
    "T43": ("p2", lambda *p: r_region(*p, True, True)),
    "T44": ("f1", f_region),
    "T45": ("f2", fbar_region),
    "T46": ("e1", lambda *p: e_region(*p)),
    "T47": ("e2", lambda *p: e_region(*p, True, True)),
    "T48": ("e3", lambda *p: e_region(*p, True, False)),
    "T49": ("e4", lambda *p: e_region(*p, False, True)),
}
G_FLAGS = {"plain": (False, False), "west": (True, False), "northeast": (False, True), "both": (True, True)}


def default_grid(theorem: str) -> list[dict]:
    small = itertools.product(range(4), range(3), range(3), range(2))
    if theorem in ("T42", "T43"):
        return [dict(zip("xyza", p)) for p in small]
    if theorem in ("T44", "T45"):
        lo = 1 if theorem == "T44" else 0
        return [dict(zip("xyza", p)) for p in itertools.product(range(lo, 4), range(3), range(3), range(3))]
    if theorem in ("T46", "T47", "T48", "T49"):
        return [dict(zip("xyza", p)) for p in itertools.product(range(4), range(3), range(3), range(3))
                if p[1] + p[2] >= 1]
    if theorem == "L41":
        return [dict(n=n, x=x, variant=v) for v in G_FLAGS for n in range(5) for x in range(5)]
    if theorem == "C410":
        return [dict(variant=v, x=x, y=y, z=z, a=a) for v in ("C", "Cbar", "D", "Dbar")
                for x, y, z, a in itertools.product(range(3), range(1, 3), range(3), range(3))]
    if theorem in ("T11", "T12"):
        ys = (lambda t: range(t // 2 + 1)) if theorem == "T11" else (lambda t: range(1, t // 2 + 1))
        return [dict(t=t, y=y, a=a, x=x) for t in range(1, 7) for y in ys(t)
                for a in range(4) for x in range(4)]
    if theorem in ("T13", "T14"):
        ys = (lambda t: range(t // 2)) if theorem == "T13" else (lambda t: range(1, t // 2 + 1))
        return [dict(t=t, y=y, a=a, x=x) for t in (2, 4, 6) for y in ys(t)
                for a in (0, 2) for x in (0, 2)]
    raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")


def valid_point(theorem: str, p: dict) -> bool:
    """Whether a grid point lies in the parameter range of the theorem."""
    if any(isinstance(v, int) and v < 0 for v in p.values()):
        return False
    if theorem in ("T11", "T12", "T13", "T14"):
        t, y = p["t"], p["y"]
        if theorem == "T13":
            return y < t // 2
        return y <= t // 2 and (y >= 1 or theorem == "T11")
    if theorem == "T44":
        return p["x"] >= 1
    if theorem in ("T46", "T47", "T48", "T49"):
        return p["y"] + p["z"] >= 1
    if theorem == "C410":
        return p["y"] >= 1
    return True


def _filter_cs(region: Region):
    if len(region.cells) > FILTER_CAP:
        return None
    return count_symmetric(region)


def _orbit_cs(region: Region):
    try:
        return mgf(orbit_graph(region))
    except SymmetryError:
        return None


def _oracle_report(theorem, point, region, count) -> list[CheckReport]:
    """Transfer-matrix value against brute force, for regions within the brute-force cap."""
    if not region.cells or len(region.cells) > BRUTE_FORCE_CAP:
        return []
    t0 = time.perf_counter()
    brute = brute_force_mgf(build_dual(region)) * region.forced
    return [_report(f"{theorem}:oracle", point, count, brute, t0, f"{len(region.cells)} cells")]


def check_point(theorem: str, point: dict, errata: bool = False) -> list[CheckReport]:
    """Formula against an independent count at one grid point."""
    t0 = time.perf_counter()
    p = dict(point)
    if theorem in _PRODUCT:
        fname, build = _PRODUCT[theorem]
        args = (p["x"], p["y"], p["z"], p["a"])
        r = build(*args)
        count = region_value(r)
        out = [_report(theorem, p, _formula(fname, errata)(*args), count, t0)]
        return out + _oracle_report(theorem, p, r, count)
    if theorem == "L41":
        r = g_region(p["n"], p["x"], *G_FLAGS[p["variant"]])
        count = region_value(r)
        out = [_report(theorem, p, fm.g_formula(p["n"], p["x"], p["variant"]), count, t0)]
        return out + _oracle_report(theorem, p, r, count)
    if theorem == "C410":
        args = (p["x"], p["y"], p["z"], p["a"])
        r = c_d_regions(*args, p["variant"])
        direct = region_value(r)
        if r.cells:
            fac = ciucu_factorize(build_dual(r), r.axis / 2)
            split = Fraction(2) ** fac.k * mgf(fac.plus) * mgf(fac.minus) * r.forced
        else:
            split = direct
        val = fm.cd_formula(p["variant"], *args, errata=errata)
        out = [_report("C410", p, val, direct, t0)]
        out.append(_report("C410:ciucu", p, direct, split, t0, "direct mgf vs factored product"))
        return out + _oracle_report(theorem, p, r, direct)
    if theorem in ("T11", "T12"):
        t, y, a, x = p["t"], p["y"], p["a"], p["x"]
        r = holey_hexagon(t, y, a, x, "H" if theorem == "T11" else "Hbar")
        orbit = _orbit_cs(r)
        filt = _filter_cs(r)
        out = []
        fn = fm.cs_h if theorem == "T11" else fm.cs_hbar
        try:
            val = fn(t, y, a, x, errata=errata)
        except fm.NoProductFormula as e:
            if orbit is not None and filt is not None:
                out.append(_report(f"{theorem}:oracles", p, filt.cs, orbit, t0, f"count only: {e}"))
            return out
        if orbit is not None:
            out.append(_report(f"{theorem}:orbit", p, val, orbit, t0))
        if filt is not None:
            out.append(_report(f"{theorem}:filter", p, val, filt.cs, t0))
        return out
    if theorem in ("T13", "T14"):
        t, y, a, x = p["t"], p["y"], p["a"], p["x"]
        hx, ha, s = x // 2, a // 2, t // 2
        if theorem == "T13":
            val = fm.cstc_h(t, y, a, x)
            r = holey_hexagon(t, y, a, x, "H")
            sixth = r_region(hx + 1, y, s - y - 1, ha) if s - y - 1 >= 0 else None
        else:
            val = fm.cstc_hbar(t, y, a, x, errata=errata)
            r = holey_hexagon(t, y, a, x, "Hbar")
            sixth = e_region(hx + 1, y - 1, s - y + 1, ha)
        out = []
        filt = _filter_cs(r)
        if filt is not None:
            out.append(_report(f"{theorem}:filter", p, val, filt.cstc, t0))
        if sixth is not None:
            out.append(_report(f"{theorem}:sixth", p, val, region_value(sixth), t0))
        return out
    raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")


def _safe_point(theorem, point, errata):
    try:
        return check_point(theorem, point, errata)
    except (ValueError, fm.ZeroFactorError) as e:
        return [CheckReport(theorem, dict(point), Fraction(0), Fraction(0), False, 0.0, f"error: {e}")]


def theorem_sweep(theorem: str, grid=None, errata: bool = False, workers: int = 1) -> list[CheckReport]:
    """Reports for every point of ``grid`` (default: the theorem's small grid), in grid order."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    grid = default_grid(theorem) if grid is None else list(grid)
    run = partial(_safe_point, theorem, errata=errata)
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            chunks = list(ex.map(run, grid))
    else:
        chunks = [run(p) for p in grid]
    return [r for chunk in chunks for r in chunk]


# --- suites ---------------------------------------------------------------------------


def recurrence_grid(family: str, side: str) -> list[tuple]:
    """Points where every term is defined; matcher-side grids stay small."""
    shape = FAMILIES[family][0]
    hi = (4, 3, 4, 3) if side == "formula" else (3, 3, 3, 3)
    lo_x = 1 if family == "F" else 0
    out = []
    for p in itertools.product(range(lo_x, lo_x + hi[0]), range(1, 2 + hi[1]), range(1, 1 + hi[2]), range(hi[3])):
        try:
            shape(*p)
        except OutOfScope:
            continue
        out.append(p)
    return out


def recurrence_suite(families=None, sides=("formula", "matcher"), errata: bool = False,
                     limit: int | None = None) -> list[CheckReport]:
    out = []
    for fam in families or FAMILIES:
        for side in sides:
            for p in recurrence_grid(fam, side)[:limit]:
                try:
                    out.append(recurrence_check(fam, p, side, errata))
                except fm.ZeroFactorError as e:
                    out.append(CheckReport(f"rec:{fam}:{side}", dict(zip("xyza", p)), Fraction(0),
                                           Fraction(0), False, 0.0, f"error: {e}"))
    return out


def kuo_suite(samples: int = 20, seed: int = 0) -> list[CheckReport]:
    """The augmented R graphs, plus random instances on R-, E- and F-regions."""
    rng = random.Random(seed)
    out = []
    for x, y, z, a in itertools.product(range(2), range(1, 3), range(1, 3), range(1, 3)):
        inst = r_kuo_instance(x, y, z, a)
        out.append(kuo_check(inst.graph, inst.u, inst.v, inst.w, inst.s, "kuo:R-band", dict(x=x, y=y, z=z, a=a)))
    builders = {"R": lambda x, y, z, a: r_region(x, y, z, a), "E": lambda x, y, z, a: e_region(x, y, z, a),
                "F": f_region}
    for fam, build in builders.items():
        done = 0
        while done < samples:
            p = tuple(rng.randint(0, 2) for _ in range(4))
            if fam == "F":
                p = (p[0] + 1,) + p[1:]
            try:
                region = build(*p)
                inst = random_kuo_instance(region, rng)
            except ValueError:
                continue
            out.append(kuo_check(inst.graph, inst.u, inst.v, inst.w, inst.s, f"kuo:{fam}-random",
                                 dict(zip("xyza", p), seed=seed, i=done)))
            done += 1
    return out


def default_suite(errata: bool = False) -> list[CheckReport]:
    out = kuo_suite()
    out += recurrence_suite(errata=errata)
    for th in THEOREMS:
        out += theorem_sweep(th, errata=errata)
    return out

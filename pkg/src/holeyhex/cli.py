"""Command-line front end.

Exit status: 0 success, 1 a verification failed, 2 usage error, 3 a
resource cap was hit.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import os
import sys
from pathlib import Path

from . import formulas as fm
from . import verify as vf
from .lattice import loads
from .matcher import CapError, FrontierError, StateLimitError, brute_force_mgf, enumerate_tilings, mgf
from .dualgraph import build_dual
from .regions import (CD_VARIANTS, c_d_regions, e_region, f_region, fbar_region, g_region,
                      hexagon, holey_hexagon, r_region)
from .render import region_svg
from .symmetry import SymmetryError, count_symmetric, orbit_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
WEIGHTS = {"none": (False, False), "west": (True, False), "northeast": (False, True), "both": (True, True)}


class UsageError(ValueError):
    pass


def _rat(q) -> str:
    return vf._rat(q)


def _ints(text: str, n: int | None = None, what: str = "params") -> tuple[int, ...]:
    try:
        vals = tuple(int(s) for s in text.split(",") if s.strip() != "")
    except ValueError:
        raise UsageError(f"--{what} must be comma-separated integers, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise UsageError(f"--{what} needs {n} values, got {len(vals)}")
    return vals


def build_region(name: str, params: str | None, weighted: str = "none"):
    """Region from a family name (or ``file:<path>``) and a parameter list."""
    if name.startswith("file:"):
        path = Path(name[5:])
        if not path.is_file():
            raise UsageError(f"no such region file: {path}")
        return loads(path.read_text())
    if params is None:
        raise UsageError(f"--params is required for region family {name!r}")
    w, ne = WEIGHTS[weighted]
    fam = name.lower()
    if fam == "hexagon":
        return hexagon(*_ints(params, 3))
    if fam == "g":
        return g_region(*_ints(params, 2), w, ne)
    if fam in ("h", "hbar"):
        return holey_hexagon(*_ints(params, 4), "H" if fam == "h" else "Hbar")
    builders = {"r": lambda *p: r_region(*p, w, ne), "e": lambda *p: e_region(*p, w, ne),
                "f": f_region, "fbar": fbar_region}
    if fam in builders:
        return builders[fam](*_ints(params, 4))
    variant = {v.lower(): v for v in CD_VARIANTS}.get(fam)
    if variant:
        return c_d_regions(*_ints(params, 4), variant)
    raise UsageError(f"unknown region {name!r}; use hexagon, g, r, e, f, fbar, h, hbar, "
                     f"{', '.join(v.lower() for v in CD_VARIANTS)} or file:<path>")


# --- subcommands -------------------------------------------------------------------


def cmd_count(args, out) -> int:
    region = build_region(args.region, args.params, args.weighted)
    if args.method == "brute":
        value = brute_force_mgf(build_dual(region)) * region.forced
    else:
        value = mgf(region, axis=args.axis) * region.forced
    print(_rat(value), file=out)
    return EXIT_OK


def cmd_cs_count(args, out) -> int:
    variant = {"h": "H", "hbar": "Hbar"}.get(args.region.lower())
    if variant is None:
        raise UsageError("--region must be H or Hbar")
    t, y, a, x = args.t, args.y, args.a, args.x
    region = holey_hexagon(t, y, a, x, variant)
    if args.method == "formula":
        if args.cstc:
            value = fm.cstc_h(t, y, a, x) if variant == "H" else fm.cstc_hbar(t, y, a, x, errata=args.errata)
        else:
            fn = fm.cs_h if variant == "H" else fm.cs_hbar
            value = fn(t, y, a, x, errata=args.errata)
        print(_rat(value), file=out)
        # cross-check against the filter count whenever it is affordable
        if len(region.cells) <= vf.FILTER_CAP:
            sc = count_symmetric(region)
            oracle = sc.cstc if args.cstc else sc.cs
            if oracle != value:
                print(f"error: formula {_rat(value)} disagrees with the filter count {_rat(oracle)}", file=sys.stderr)
                return EXIT_FAIL
        return EXIT_OK
    if args.method == "orbit":
        if args.cstc:
            raise UsageError("--cstc is counted by --method filter or formula")
        print(_rat(mgf(orbit_graph(region))), file=out)
        return EXIT_OK
    sc = count_symmetric(region, cap=args.cap)
    print(_rat(sc.cstc if args.cstc else sc.cs), file=out)
    return EXIT_OK


def cmd_formula(args, out) -> int:
    name = args.name.lower()
    if name == "macmahon":
        value = fm.macmahon(*_ints(args.params, 3))
    elif name == "macdonald":
        value = fm.macdonald_cs(*_ints(args.params, 1))
    elif name in fm.FORMULAS:
        fn = vf._formula(name, args.errata)
        value = fn(*_ints(args.params, 4))
    else:
        raise UsageError(f"unknown formula {args.name!r}; choose from "
                         f"{', '.join(list(fm.FORMULAS) + ['macmahon', 'macdonald'])}")
    print(_rat(value), file=out)
    return EXIT_OK


def parse_ranges(items) -> dict:
    """``key=lo:hi`` (inclusive) or ``key=v1,v2,...`` into value lists."""
    out = {}
    for item in items or ():
        key, sep, spec = item.partition("=")
        if not sep or not key:
            raise UsageError(f"range {item!r} must look like key=lo:hi or key=v1,v2")
        try:
            if ":" in spec:
                lo, hi = (int(s) for s in spec.split(":"))
                vals = list(range(lo, hi + 1))
            else:
                vals = [int(s) if s.lstrip("-").isdigit() else s for s in spec.split(",")]
        except ValueError:
            raise UsageError(f"bad range {item!r}") from None
        out[key] = vals
    return out


def grid_for(theorem: str, ranges: dict) -> list[dict]:
    base = vf.default_grid(theorem)
    keys = list(base[0])
    unknown = set(ranges) - set(keys)
    if unknown:
        raise UsageError(f"{theorem} has parameters {', '.join(keys)}; unknown {', '.join(sorted(unknown))}")
    values = {k: ranges.get(k) or sorted({p[k] for p in base}, key=str) for k in keys}
    grid = [dict(zip(keys, combo)) for combo in itertools.product(*(values[k] for k in keys))]
    return [p for p in grid if vf.valid_point(theorem, p)]


def _print_reports(reports, out, color: bool, timing: bool = True) -> int:
    if not timing:
        reports = [vf.CheckReport(r.name, r.point, r.lhs, r.rhs, r.passed, 0.0, r.note) for r in reports]
    for r in reports:
        line = r.line()
        if color:
            tag = "\033[32mpass\033[0m" if r.passed else "\033[31mFAIL\033[0m"
            line = line.replace(" pass ", f" {tag} ", 1).replace(" FAIL ", f" {tag} ", 1)
        print(line, file=out)
    print("# summary " + vf.json.dumps(vf.summary(reports), sort_keys=True), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(args, out) -> int:
    ranges = parse_ranges(args.grid)
    if args.suite == "kuo":
        reports = vf.kuo_suite(samples=args.samples, seed=args.seed)
    elif args.suite == "recurrences":
        fams = args.family or list(vf.FAMILIES)
        for f in fams:
            if f not in vf.FAMILIES:
                raise UsageError(f"unknown family {f!r}; choose from {', '.join(vf.FAMILIES)}")
        reports = vf.recurrence_suite(fams, errata=args.errata)
    elif args.suite == "theorems":
        names = args.theorem or list(vf.THEOREMS)
        reports = []
        for th in names:
            if th not in vf.THEOREMS:
                raise UsageError(f"unknown theorem {th!r}; choose from {', '.join(vf.THEOREMS)}")
            grid = grid_for(th, ranges) if ranges else None
            reports += vf.theorem_sweep(th, grid, errata=args.errata, workers=args.workers)
    else:
        reports = vf.default_suite(errata=args.errata)
    return _print_reports(reports, out, _color(out), timing=not args.no_timing)


def cmd_sweep(args, out) -> int:
    if args.theorem not in vf.THEOREMS:
        raise UsageError(f"unknown theorem {args.theorem!r}; choose from {', '.join(vf.THEOREMS)}")
    grid = grid_for(args.theorem, parse_ranges(args.ranges))
    reports = vf.theorem_sweep(args.theorem, grid, errata=args.errata, workers=args.workers)
    keys = list(grid[0]) if grid else []
    rows = [[r.name] + [r.point.get(k, "") for k in keys] + [_rat(r.lhs), _rat(r.rhs), "pass" if r.passed else "FAIL"]
            for r in reports]
    header = ["check"] + keys + ["formula", "count", "status"]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.write(buf.getvalue())
    else:
        table = [header] + [[str(c) for c in row] for row in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            print("  ".join(c.rjust(wd) for c, wd in zip(row, widths)).rstrip(), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_render(args, out) -> int:
    region = build_region(args.region, args.params, args.weighted)
    tiling = None
    if args.tiling is not None:
        index = 0 if args.tiling == "first" else args.index
        if args.tiling == "index" and index is None:
            raise UsageError("--tiling index needs --index N")
        tiling = next(itertools.islice(enumerate_tilings(region, cap=args.cap), index, None), None)
        if tiling is None:
            raise UsageError(f"region has fewer than {index + 1} tilings")
    Path(args.out).write_text(region_svg(region, tiling))
    print(f"wrote {args.out}", file=out)
    return EXIT_OK


def _color(out) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(out, "isatty") and out.isatty()


# --- argument parsing ---------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="holeyhex", description="Exact lozenge tiling counts of hexagons with holes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="tiling generating function of a region")
    c.add_argument("--region", required=True, help="family name or file:<path>")
    c.add_argument("--params", help="comma-separated integers")
    c.add_argument("--weighted", choices=list(WEIGHTS), default="none")
    c.add_argument("--method", choices=["matcher", "brute"], default="matcher")
    c.add_argument("--axis", type=int, choices=[0, 1, 2], default=0, help="sweep direction")
    c.set_defaults(func=cmd_count)

    s = sub.add_parser("cs-count", help="cyclically symmetric tilings of H or Hbar")
    s.add_argument("--region", required=True)
    for k in "tyax":
        s.add_argument(f"--{k}", type=int, required=True)
    s.add_argument("--method", choices=["filter", "orbit", "formula"], default="filter")
    s.add_argument("--cstc", action="store_true", help="count tilings also fixed by the reflection")
    s.add_argument("--errata", action="store_true", help="use the corrected formulas")
    s.add_argument("--cap", type=int, default=400, help="cell cap for the filter count")
    s.set_defaults(func=cmd_cs_count)

    f = sub.add_parser("formula", help="evaluate a product formula")
    f.add_argument("--name", required=True)
    f.add_argument("--params", required=True)
    f.add_argument("--errata", action="store_true")
    f.set_defaults(func=cmd_formula)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=["default", "kuo", "recurrences", "theorems"], default="default")
    v.add_argument("--theorem", action="append", help="restrict the theorems suite (repeatable)")
    v.add_argument("--family", action="append", help="restrict the recurrences suite (repeatable)")
    v.add_argument("--grid", nargs="+", help="key=lo:hi or key=v1,v2 items")
    v.add_argument("--errata", action="store_true")
    v.add_argument("--samples", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--no-timing", action="store_true", help="print zero elapsed times (byte-stable output)")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("sweep", help="formula against count over a grid")
    w.add_argument("--theorem", required=True)
    w.add_argument("--ranges", nargs="+", help="key=lo:hi or key=v1,v2 items")
    w.add_argument("--format", choices=["text", "csv"], default="text")
    w.add_argument("--errata", action="store_true")
    w.add_argument("--workers", type=int, default=1)
    w.set_defaults(func=cmd_sweep)

    r = sub.add_parser("render", help="write an SVG picture")
    r.add_argument("--region", required=True)
    r.add_argument("--params")
    r.add_argument("--weighted", choices=list(WEIGHTS), default="none")
    r.add_argument("--out", required=True)
    r.add_argument("--tiling", choices=["first", "index"])
    r.add_argument("--index", type=int)
    r.add_argument("--cap", type=int, default=2000, help="cell cap for tiling enumeration")
    r.set_defaults(func=cmd_render)
    return p


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = make_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (FrontierError, StateLimitError, CapError) as e:
        print(f"resource cap: {e}; try a smaller instance or another sweep --axis", file=sys.stderr)
        return EXIT_CAP
    except fm.NoProductFormula as e:
        print(f"no product formula: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, SymmetryError, ZeroDivisionError) as e:
        print(f"invalid parameters: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

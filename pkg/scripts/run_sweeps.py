"""Run every theorem sweep with the formulas as stated and with corrections.

Writes one CSV per theorem and mode under --out and prints a failure table.

    python scripts/run_sweeps.py --out results/sweeps --workers 4
"""
from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass, field
from pathlib import Path

from holeyhex import verify as vf


@dataclass
class SweepConfig:
    out: Path = Path("results/sweeps")
    theorems: list = field(default_factory=lambda: list(vf.THEOREMS))
    workers: int = 1


def write_csv(path: Path, reports) -> None:
    keys = sorted({k for r in reports for k in r.point}, key=lambda k: "ntyxza variant".find(k))
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["check", *keys, "formula", "count", "status", "note"])
        for r in reports:
            w.writerow([r.name, *(r.point.get(k, "") for k in keys), vf._rat(r.lhs), vf._rat(r.rhs),
                        "pass" if r.passed else "FAIL", r.note])


def main(cfg: SweepConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    print(f"{'theorem':8} {'checks':>7} {'fail':>6} {'fail(corrected)':>16}")
    for th in cfg.theorems:
        row = []
        for errata in (False, True):
            reps = vf.theorem_sweep(th, errata=errata, workers=cfg.workers)
            write_csv(cfg.out / f"{th}{'_corrected' if errata else ''}.csv", reps)
            row.append(vf.summary(reps))
        print(f"{th:8} {row[0]['checks']:7} {row[0]['failed']:6} {row[1]['failed']:16}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=SweepConfig.out)
    ap.add_argument("--theorem", action="append", dest="theorems")
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    main(SweepConfig(a.out, a.theorems or list(vf.THEOREMS), a.workers))

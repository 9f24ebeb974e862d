"""Ratio of formula to count wherever a product formula disagrees.

Groups the disagreements by theorem and by the ratio they exhibit, which is
how the corrections were found: a constant 3/2 on the doubly weighted x = 0
regions, a power 2^a on the cyclically symmetric counts, zero for F1 at a = 0.

    python scripts/formula_defects.py [--corrected]
"""
from __future__ import annotations

import argparse
from collections import Counter, defaultdict
from dataclasses import dataclass

from holeyhex import verify as vf


@dataclass
class DefectConfig:
    corrected: bool = False
    show: int = 4


def ratio(r) -> str:
    if r.rhs == 0:
        return "count 0"
    q = r.lhs / r.rhs
    return vf._rat(q)


def main(cfg: DefectConfig) -> None:
    for th in vf.THEOREMS:
        bad = [r for r in vf.theorem_sweep(th, errata=cfg.corrected) if not r.passed]
        if not bad:
            print(f"{th}: no disagreements")
            continue
        by_ratio = defaultdict(list)
        for r in bad:
            by_ratio[ratio(r)].append(r)
        print(f"{th}: {len(bad)} disagreements")
        for q, rs in sorted(by_ratio.items(), key=lambda kv: -len(kv[1])):
            common = {k: v for k, v in Counter((k, v) for r in rs for k, v in r.point.items()).items()
                      if v == len(rs)}
            fixed = ", ".join(f"{k}={v}" for k, v in common) or "none"
            pts = "; ".join(",".join(map(str, r.point.values())) for r in rs[:cfg.show])
            print(f"  formula/count = {q:>8}  x{len(rs):<4} shared: {fixed:<24} e.g. {pts}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--corrected", action="store_true")
    ap.add_argument("--show", type=int, default=4)
    a = ap.parse_args()
    main(DefectConfig(a.corrected, a.show))

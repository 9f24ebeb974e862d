"""SVG figures of the region families, each with one tiling where affordable.

    python scripts/render_figures.py --out figures
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from holeyhex.matcher import BRUTE_FORCE_CAP, enumerate_tilings
from holeyhex.regions import (c_d_regions, e_region, f_region, fbar_region, g_region, hexagon,
                              holey_hexagon, r_region)
from holeyhex.render import region_svg

FIGURES = {
    "hexagon_2_3_2": lambda: hexagon(2, 3, 2),
    "H_4_1_a2_x2": lambda: holey_hexagon(4, 1, 2, 2, "H"),
    "Hbar_4_1_a2_x2": lambda: holey_hexagon(4, 1, 2, 2, "Hbar"),
    "G_3_2_both": lambda: g_region(3, 2, True, True),
    "R_1_1_2_1": lambda: r_region(1, 1, 2, 1),
    "R_1_1_2_1_both": lambda: r_region(1, 1, 2, 1, True, True),
    "F_2_1_2_1": lambda: f_region(2, 1, 2, 1),
    "Fbar_1_1_2_1": lambda: fbar_region(1, 1, 2, 1),
    "E_1_2_1_1": lambda: e_region(1, 2, 1, 1),
    "C_1_1_1_1": lambda: c_d_regions(1, 1, 1, 1, "C"),
    "Dbar_1_1_1_1": lambda: c_d_regions(1, 1, 1, 1, "Dbar"),
}


@dataclass
class FigureConfig:
    out: Path = Path("figures")
    tiling_cap: int = 4 * BRUTE_FORCE_CAP


def main(cfg: FigureConfig) -> None:
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, build in FIGURES.items():
        region = build()
        tiling = None
        if len(region.cells) <= cfg.tiling_cap:
            tiling = next(iter(enumerate_tilings(region, cap=cfg.tiling_cap)), None)
        path = cfg.out / f"{name}.svg"
        path.write_text(region_svg(region, tiling))
        print(f"{path}  {len(region.cells)} cells{'  with a tiling' if tiling else ''}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=FigureConfig.out)
    ap.add_argument("--tiling-cap", type=int, default=FigureConfig.tiling_cap)
    a = ap.parse_args()
    main(FigureConfig(a.out, a.tiling_cap))

"""Per-rung drop in log10 fleet qubits along the energy ladder.

For each consecutive pair of rungs, report the largest per-cell reduction
over a grid spanning the mainnet marker, and split it into the part bought
by a shorter cycle (r_cap growth) and the part from code distance.
"""

from __future__ import annotations

import argparse
import math

from groverfleet.fleet_planner import SweepGrid
from groverfleet.hesc_ladder import LADDER, ladder_sweep, per_rung_reductions
from groverfleet.mining_model import MAINNET_BITS_2025


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t-caps", default="60,600")
    args = ap.parse_args()
    caps = tuple(float(x) for x in args.t_caps.split(","))
    grid = SweepGrid((32.0, 64.0, MAINNET_BITS_2025, 96.0, 128.0, 160.0, 224.0, 256.0), caps, (0.5, 0.99))
    reports = ladder_sweep(LADDER, grid)
    tags = [r.tag for r in LADDER]
    print(f"{'from':>22} {'to':>22} {'max drop':>9} {'2*log10 dS':>11}")
    speed = {r.tag: r.log10_speedup for r in LADDER}
    for lo, hi, worst in per_rung_reductions(reports, tags):
        ds = 2 * (speed[hi] - speed[lo])
        w = "n/a" if math.isinf(worst) else f"{worst:.2f}"
        print(f"{lo:>22} {hi:>22} {w:>9} {ds:>11.2f}")


if __name__ == "__main__":
    main()

"""Write the data series behind every figure to CSV (plus SVG heatmaps)."""

from __future__ import annotations

import argparse
from pathlib import Path

from groverfleet import figures
from groverfleet.cli_io.hashrate import hashrate_rows, ingest_hashrate_csv
from groverfleet.cli_io.reports import render_fleet, render_rows
from groverfleet.cli_io.svg import render_svg_heatmap
from groverfleet.hesc_ladder import LADDER

DATA = Path(__file__).resolve().parent.parent / "data"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("figure_data"))
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--hashrate-csv", type=Path, default=DATA / "hashrate_sample.csv")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    def save(name: str, text: str) -> None:
        (args.out / name).write_text(text)
        print(f"wrote {args.out / name}")

    for name in ("fleet-heatmap", "fleet-tradeoff", "high-energy-heatmap", "high-energy-tradeoff"):
        reports = figures.fleet_figure_reports(name, workers=args.workers)
        save(f"{name}.csv", render_fleet(reports, "csv"))
        if name == "fleet-heatmap":
            for arch in ("superconducting", "neutral_atom", "ion_trap"):
                for pt in (0.5, 0.99):
                    bits, caps, m = figures.heatmap_cells(reports, arch, pt)
                    save(f"{name}_{arch}_pt{pt:g}.svg", render_svg_heatmap(m, bits, caps, title=f"{arch}, Pt={pt:g}"))
        if name == "high-energy-heatmap":
            for rung in LADDER:
                bits, caps, m = figures.heatmap_cells(reports, "superconducting", 0.5, rung.tag)
                save(f"{name}_{rung.tag}.svg", render_svg_heatmap(m, bits, caps, title=rung.tag))

    save("power-vs-difficulty.csv", render_rows(figures.power_vs_difficulty_rows(), "csv"))
    save("kardashev-budget.csv", render_rows(figures.kardashev_budget_rows(), "csv"))
    save("energy-ladder.csv", render_rows(figures.energy_ladder_rows(), "csv"))
    save("hashrate-history.csv", render_rows(hashrate_rows(ingest_hashrate_csv(args.hashrate_csv)), "csv"))


if __name__ == "__main__":
    main()

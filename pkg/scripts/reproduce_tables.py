"""Print every reproduced table: gate ledgers, footprints, scenario scaling,
failure-budget sensitivity and the energy ladder."""

from __future__ import annotations

import argparse
import time

from groverfleet import figures
from groverfleet.cli_io.reports import render_rows
from groverfleet.fleet_planner import scenario_scaling
from groverfleet.mining_model import OracleSpec, plan_grover, search_from_difficulty, search_spec
from groverfleet.surface_code import SUPERCONDUCTING, machine_footprint


def footprint_rows() -> list[dict]:
    rows = []
    cases = (
        ("difficulty-1 header", search_from_difficulty(256, 1.0), OracleSpec(include_diffusion=False)),
        ("difficulty-1 header +diffusion", search_from_difficulty(256, 1.0), OracleSpec()),
        ("p2pkh single solution", search_spec(160, 160.0), OracleSpec.p2pkh()),
    )
    for label, search, oracle in cases:
        plan = plan_grover(search, oracle, SUPERCONDUCTING.tau_s)
        fp = machine_footprint(plan, SUPERCONDUCTING)
        rows.append({
            "case": label,
            "r": plan.r_ideal.value,
            "d": fp.code_distance,
            "width": fp.logical_width,
            "data_qubits": fp.data_qubits.value,
            "factories": fp.factory_count,
            "factory_qubits": fp.factory_qubits.value,
            "total_qubits": fp.total_qubits.value,
            "runtime_s": fp.runtime_seconds.value,
        })
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--format", choices=("table", "csv", "json"), default="table")
    args = ap.parse_args()

    sections = [
        ("gate ledgers (cdkm_baseline)", lambda: figures.ledger_rows()),
        ("gate ledgers (gidney_scheduled)", lambda: figures.ledger_rows("gidney_scheduled")),
        ("gate ledgers (carry_save)", lambda: figures.ledger_rows("carry_save")),
        ("single-machine footprints", footprint_rows),
        ("scenario scaling, 600 s", lambda: [r.to_dict() for r in scenario_scaling(600.0)]),
        ("scenario scaling, 60 s", lambda: [r.to_dict() for r in scenario_scaling(60.0)]),
        ("failure-budget sensitivity (oracle-only width)", figures.failure_budget_rows),
        ("energy ladder", figures.energy_ladder_rows),
    ]
    for title, build in sections:
        t0 = time.perf_counter()
        rows = build()
        dt_ms = 1e3 * (time.perf_counter() - t0)
        print(f"## {title}  [{dt_ms:.1f} ms]")
        print(render_rows(rows, args.format))


if __name__ == "__main__":
    main()

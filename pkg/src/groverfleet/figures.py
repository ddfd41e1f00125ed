"""Data series behind the published tables and figures (data only, no plotting)."""

from __future__ import annotations

from groverfleet.energy import (
    S9,
    S19,
    S21,
    EfficiencyTrack,
    network_power,
    power_vs_difficulty_series,
)
from groverfleet.fleet_planner import (
    FleetReport,
    SweepCell,
    SweepGrid,
    heatmap_grid,
    heatmap_matrix,
    run_sweep,
    tradeoff_grid,
)
from groverfleet.hash_ledger import AdderModel, PipelineKind, ToffoliSynthesis, pipeline_ledger
from groverfleet.hesc_ladder import LADDER, ladder_sweep
from groverfleet.mining_model import MAINNET_BITS_2025, OracleSpec, bits_to_difficulty, plan_grover, search_spec
from groverfleet.surface_code import (
    ION_TRAP,
    NEUTRAL_ATOM,
    SUPERCONDUCTING,
    ArchitectureSpec,
    FailureBudgetMode,
    WidthMode,
    machine_footprint,
)
from groverfleet.cli_io.svg import HeatCell

FIGURES = (
    "fleet-heatmap",
    "fleet-tradeoff",
    "scenario-scaling",
    "failure-budget",
    "power-vs-difficulty",
    "kardashev-budget",
    "energy-ladder",
    "high-energy-heatmap",
    "high-energy-tradeoff",
)


def ledger_rows(model: AdderModel | str = AdderModel.CDKM_BASELINE) -> list[dict]:
    """Forward-hash ledgers for every pipeline, with the standard-synthesis penalty."""
    rows = []
    for kind in PipelineKind:
        rel = pipeline_ledger(kind, model, ToffoliSynthesis.RELATIVE_PHASE)
        std = pipeline_ledger(kind, model, ToffoliSynthesis.STANDARD)
        row = {"pipeline": kind.value, "adder_model": AdderModel(model).value}
        row.update(rel.to_dict())
        row["std_t_penalty"] = std.t_count - rel.t_count
        rows.append(row)
    return rows


def failure_budget_rows(archs=(SUPERCONDUCTING, NEUTRAL_ATOM, ION_TRAP), t_caps=(60.0, 600.0), bits: float = 256.0) -> list[dict]:
    """One-machine totals under both failure-budget proxies (oracle-only width)."""
    rows = []
    oracle = OracleSpec()
    for t_cap in t_caps:
        for arch in archs:
            plan = plan_grover(search_spec(oracle.register_bits, bits), oracle, arch.tau_s, t_cap)
            t = machine_footprint(plan, arch, FailureBudgetMode.T_COUNT_PROXY, WidthMode.ORACLE_ONLY)
            v = machine_footprint(plan, arch, FailureBudgetMode.VOLUME_PROXY, WidthMode.ORACLE_ONLY)
            if t is None or v is None:
                rows.append({"arch": arch.name, "t_cap_s": t_cap, "feasible": False})
                continue
            rows.append({
                "arch": arch.name,
                "t_cap_s": t_cap,
                "feasible": True,
                "d_t": t.code_distance,
                "d_v": v.code_distance,
                "q_machine_t": t.total_qubits.value,
                "q_machine_v": v.total_qubits.value,
                "inflation": v.total_qubits.value / t.total_qubits.value,
            })
    return rows


def heatmap_cells(reports: list[FleetReport], arch: str, target: float, rung_tag: str | None = None):
    bits, caps, grid = heatmap_matrix(reports, arch, target, rung_tag)
    matrix = [
        [HeatCell(r.fleet_qubits.log10, r.machine.code_distance) if r.feasible else HeatCell(None) for r in row]
        for row in grid
    ]
    return bits, [f"{c:g} s" for c in caps], matrix


def kardashev_budget_rows(
    bits=tuple(float(b) for b in range(16, 257, 16)) + (MAINNET_BITS_2025,),
    tracks: tuple[EfficiencyTrack, ...] = (S9, S19, S21),
    archs: tuple[ArchitectureSpec, ...] = (SUPERCONDUCTING, NEUTRAL_ATOM, ION_TRAP),
    target: float = 0.5,
    t_cap: float = 600.0,
) -> list[dict]:
    """Classical network power per track and quantum fleet power per architecture vs b."""
    rows = []
    for b in sorted(bits):
        d = bits_to_difficulty(b).difficulty
        row = {"b": b, "difficulty": d}
        for tr in tracks:
            row[f"classical_w_{tr.name}"] = network_power(d, tr)
        for arch in archs:
            rep = run_sweep(SweepGrid((b,), (t_cap,), (target,), (arch,)))[0]
            row[f"log10_fleet_w_{arch.name}"] = rep.fleet_watts.log10 if rep.feasible else None
        rows.append(row)
    return rows


def energy_ladder_rows(rungs=LADDER) -> list[dict]:
    return [r.to_dict() for r in rungs]


def fleet_figure_reports(name: str, template: SweepCell | None = None, architectures=None, workers: int = 1) -> list[FleetReport]:
    archs = architectures or ("superconducting", "neutral_atom", "ion_trap")
    if name == "fleet-heatmap":
        return run_sweep(heatmap_grid(archs), template, workers)
    if name == "fleet-tradeoff":
        return run_sweep(tradeoff_grid(archs), template, workers)
    if name == "high-energy-heatmap":
        return ladder_sweep(LADDER, heatmap_grid(("superconducting",)), template, workers=workers)
    if name == "high-energy-tradeoff":
        return ladder_sweep(LADDER, tradeoff_grid(("superconducting",)), template, workers=workers)
    raise KeyError(name)


def power_vs_difficulty_rows() -> list[dict]:
    return power_vs_difficulty_series()

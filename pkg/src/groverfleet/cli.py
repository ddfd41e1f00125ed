"""``groverfleet`` command line: ledger, estimate, sweep, baseline, ladder, verify."""

from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import replace
from pathlib import Path

from groverfleet import figures
from groverfleet.cli_io.config import OUTPUT_FORMATS, RunConfig, parse_config, validate
from groverfleet.cli_io.hashrate import hashrate_rows, ingest_hashrate_csv
from groverfleet.cli_io.reports import render_fleet, render_rows, to_json, write_text
from groverfleet.cli_io.svg import render_svg_heatmap
from groverfleet.energy import (
    TRACKS,
    kardashev_classify,
    network_hashrate,
    network_power,
    power_report,
    resolve_track,
)
from groverfleet.errors import InvalidInputError
from groverfleet.fleet_planner import (
    SweepCell,
    SweepGrid,
    evaluate_cell,
    heatmap_grid,
    run_sweep,
    scenario_scaling,
    tradeoff_grid,
)
from groverfleet.hash_ledger import AdderModel, PipelineKind, ToffoliSynthesis, pipeline_ledger
from groverfleet.hesc_ladder import ladder_sweep
from groverfleet.mining_model import (
    MAINNET_DIFFICULTY_2025,
    NOTES,
    difficulty_to_bits,
    plan_grover,
    search_spec,
)
from groverfleet.surface_code import machine_footprint
from groverfleet.verify import run_all


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _names(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="INI run configuration")
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="output format (default csv)")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--seed", type=int, help="PRNG seed for sampled checks")
    common.add_argument("--depth-extras", action="store_true", default=None, help="count comparator and diffusion T-depth")
    common.add_argument("--width", choices=("full", "oracle_only"), help="logical width convention")
    common.add_argument("--budget", choices=("t_count", "volume"), help="failure-budget proxy")
    common.add_argument("--workers", type=int, help="worker processes for sweeps")

    p = argparse.ArgumentParser(prog="groverfleet", description="Fault-tolerant Grover mining resource estimator.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ledger", parents=[common], help="gate ledgers of the reversible hash pipelines")
    s.add_argument("--adder", choices=[m.value for m in AdderModel], help="adder model")
    s.add_argument("--pipeline", choices=[k.value for k in PipelineKind], help="single pipeline (default: all)")
    s.add_argument("--synthesis", choices=[k.value for k in ToffoliSynthesis])

    s = sub.add_parser("estimate", parents=[common], help="one machine footprint and fleet")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--difficulty", type=float, help="Bitcoin difficulty D")
    g.add_argument("--bits", type=float, help="difficulty bits b")
    s.add_argument("--t-cap", type=float, help="runtime cap in seconds (default: uncapped)")
    s.add_argument("--pt", type=float, default=0.5, help="fleet success target")
    s.add_argument("--arch", help="architecture name")
    s.add_argument("--pipeline", choices=[k.value for k in PipelineKind])
    s.add_argument("--register-bits", type=int)

    s = sub.add_parser("sweep", parents=[common], help="fleet sweep over b x t_cap x Pt x architecture")
    s.add_argument("--bits", type=_floats, help="comma-separated difficulty bits")
    s.add_argument("--t-caps", type=_floats, help="comma-separated runtime caps (s)")
    s.add_argument("--targets", type=_floats, help="comma-separated success targets")
    s.add_argument("--archs", type=_names, help="comma-separated architecture names")
    s.add_argument(
        "--figure",
        choices=("fleet-heatmap", "fleet-tradeoff", "scenario-scaling", "failure-budget", "kardashev-budget"),
        help="emit a named figure/table data series instead of the configured grid",
    )
    s.add_argument("--svg", type=Path, help="also write an SVG heatmap (first architecture, first Pt)")

    s = sub.add_parser("baseline", parents=[common], help="classical network hashrate and power")
    s.add_argument("--difficulty", type=float, default=MAINNET_DIFFICULTY_2025)
    s.add_argument("--track", default=None, help="s9|s19|s21|file:<csv> (default: all presets)")
    s.add_argument("--figure", choices=("power-vs-difficulty", "hashrate-history"))
    s.add_argument("--hashrate-csv", type=Path, help="timestamp,hashrate_ths history for --figure hashrate-history")

    s = sub.add_parser("ladder", parents=[common], help="energy-scale ladder and rescaled sweeps")
    s.add_argument("--rungs", type=_names, help="comma-separated rung tags")
    s.add_argument("--figure", choices=("energy-ladder", "high-energy-heatmap", "high-energy-tradeoff"), default="energy-ladder")
    s.add_argument("--gate-floor-power", action="store_true", default=None, help="add the gate-power floor to each qubit")

    s = sub.add_parser("verify", parents=[common], help="hash vectors, Grover simulator, Monte Carlo")
    s.add_argument("--mc-samples", type=int, default=1 << 20)
    return p


def load_config(args: argparse.Namespace) -> RunConfig:
    """Defaults < config file < flags."""
    cfg = parse_config(args.config.read_text()) if args.config else RunConfig()
    if args.format:
        cfg = replace(cfg, output_format=args.format)
    if args.out:
        cfg = replace(cfg, output_path=args.out)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)
    if args.depth_extras:
        cfg = replace(cfg, oracle=replace(cfg.oracle, depth_extras=True))
    if args.width:
        cfg = replace(cfg, width_mode=args.width)
    if args.budget:
        cfg = replace(cfg, budget_mode=args.budget)
    if args.workers:
        cfg = replace(cfg, workers=args.workers)
    if args.command in ("sweep", "ladder"):
        sweep = cfg.sweep
        for flag, attr in (("bits", "bits"), ("t_caps", "t_caps"), ("targets", "targets"), ("archs", "architectures")):
            val = getattr(args, flag, None)
            if val:
                sweep = replace(sweep, **{attr: val})
        cfg = replace(cfg, sweep=sweep)
    if getattr(args, "rungs", None):
        cfg = replace(cfg, rungs=args.rungs)
    if getattr(args, "gate_floor_power", None):
        cfg = replace(cfg, gate_floor_power=True)
    if getattr(args, "pipeline", None) and args.command == "estimate":
        n = 160 if args.pipeline in ("ripemd160", "p2pkh") else cfg.oracle.register_bits
        cfg = replace(cfg, oracle=replace(cfg.oracle, pipeline=args.pipeline, register_bits=n))
    if getattr(args, "register_bits", None):
        cfg = replace(cfg, oracle=replace(cfg.oracle, register_bits=args.register_bits))
    return validate(cfg)


def _template(cfg: RunConfig) -> SweepCell:
    return SweepCell(
        cfg.sweep.bits[0],
        cfg.sweep.t_caps[0],
        cfg.sweep.targets[0],
        cfg.resolve_architectures()[0],
        cfg.oracle.to_oracle(),
        cfg.budget_mode,
        cfg.width_mode,
    )


def cmd_ledger(args, cfg: RunConfig) -> str:
    model = args.adder or cfg.oracle.adder_model
    if args.pipeline:
        synth = args.synthesis or cfg.oracle.synthesis
        row = {"pipeline": args.pipeline, "adder_model": model, "synthesis": synth}
        row.update(pipeline_ledger(args.pipeline, model, synth).to_dict())
        return render_rows([row], cfg.output_format)
    return render_rows(figures.ledger_rows(model), cfg.output_format)


def cmd_estimate(args, cfg: RunConfig) -> str:
    oracle = cfg.oracle.to_oracle()
    table = cfg.architectures()
    if args.arch and args.arch not in table:
        raise InvalidInputError(f"--arch: unknown architecture {args.arch!r}; known: {sorted(table)}")
    arch = table[args.arch] if args.arch else cfg.resolve_architectures()[0]
    if args.bits is not None:
        bits = args.bits
    else:
        bits = difficulty_to_bits(args.difficulty if args.difficulty is not None else 1.0).bits
    plan = plan_grover(search_spec(oracle.register_bits, bits), oracle, arch.tau_s, args.t_cap)
    machine = machine_footprint(plan, arch, cfg.budget_mode, cfg.width_mode)
    record = {
        "b": bits,
        "arch": arch.to_dict(),
        "plan": plan.to_dict(),
        "machine": None if machine is None else machine.to_dict(),
        "notes": {"runtime": NOTES["runtime"], "width_mode": cfg.width_mode},
    }
    if args.t_cap is not None:
        rep = evaluate_cell(SweepCell(bits, args.t_cap, args.pt, arch, oracle, cfg.budget_mode, cfg.width_mode))
        record["fleet"] = rep.to_dict()
    if cfg.output_format == "json":
        return to_json(record)
    flat = {
        "b": bits,
        "arch": arch.name,
        "r_ideal": plan.r_ideal.value if plan.r_ideal.log10 < 300 else None,
        "log10_r_ideal": plan.r_ideal.log10,
        "r_cap": plan.r_cap.value if plan.r_cap.log10 < 300 else None,
        "t_oracle": plan.t_oracle,
        "t_depth_iter": plan.t_depth_iter,
        "log10_p1": None if plan.p1 is None else plan.p1.log10,
        "feasible": plan.feasible,
    }
    if machine is not None:
        flat.update(
            d=machine.code_distance,
            logical_width=machine.logical_width,
            data_qubits=machine.data_qubits.value,
            factories=machine.factory_count,
            factory_qubits=machine.factory_qubits.value,
            total_qubits=machine.total_qubits.value,
            runtime_s=machine.runtime_seconds.value if machine.runtime_seconds.log10 < 300 else None,
        )
    if "fleet" in record and record["fleet"]["feasible"]:
        flat["log10_machines"] = record["fleet"]["n_machines"]["log10"]
        flat["log10_fleet_qubits"] = record["fleet"]["fleet_qubits"]["log10"]
    return render_rows([flat], cfg.output_format)


def _svg(reports, arch_name: str, target: float, path: Path, rung_tag=None) -> None:
    bits, caps, matrix = figures.heatmap_cells(reports, arch_name, target, rung_tag)
    title = f"log10 fleet qubits: {arch_name}, Pt={target:g}" + (f", {rung_tag}" if rung_tag else "")
    path.write_text(render_svg_heatmap(matrix, bits, caps, title=title))


def cmd_sweep(args, cfg: RunConfig) -> str:
    fmt = cfg.output_format
    template = _template(cfg)
    if args.figure == "scenario-scaling":
        rows = [r.to_dict() for r in scenario_scaling(cfg.sweep.t_caps[-1], template.architecture, template.oracle)]
        return render_rows(rows, fmt)
    if args.figure == "failure-budget":
        return render_rows(figures.failure_budget_rows(), fmt)
    if args.figure == "kardashev-budget":
        return render_rows(figures.kardashev_budget_rows(), fmt)
    if args.figure:
        archs = cfg.resolve_architectures() if args.archs else None
        reports = figures.fleet_figure_reports(args.figure, template, archs, cfg.workers)
    else:
        grid = SweepGrid(cfg.sweep.bits, cfg.sweep.t_caps, cfg.sweep.targets, cfg.resolve_architectures())
        reports = run_sweep(grid, template, cfg.workers)
    if args.svg:
        _svg(reports, reports[0].cell.architecture.name, reports[0].cell.target_success, args.svg)
    return render_fleet(reports, fmt)


def cmd_baseline(args, cfg: RunConfig) -> str:
    fmt = cfg.output_format
    if args.figure == "power-vs-difficulty":
        return render_rows(figures.power_vs_difficulty_rows(), fmt)
    if args.figure == "hashrate-history":
        if not args.hashrate_csv:
            raise InvalidInputError("--figure hashrate-history needs --hashrate-csv")
        return render_rows(hashrate_rows(ingest_hashrate_csv(args.hashrate_csv)), fmt)
    tracks = [resolve_track(args.track)] if args.track else list(TRACKS.values())
    d = args.difficulty
    rows = []
    for tr in tracks:
        watts = network_power(d, tr)
        k = kardashev_classify(watts)
        rows.append({
            "track": tr.name,
            "j_per_th": tr.joules_per_terahash,
            "difficulty": d,
            "b": difficulty_to_bits(d).bits,
            "hashrate_hs": network_hashrate(d),
            "power_w": watts,
            "kardashev_band": k.band.value,
            "kardashev_index": k.index,
        })
    if fmt == "json":
        rep = evaluate_cell(replace(_template(cfg), difficulty_bits=difficulty_to_bits(d).bits))
        payload = {"classical": rows, "band_edges_w": [1e16, 1e26, 1e36]}
        if rep.feasible:
            payload["quantum_vs_classical"] = [power_report(rep.fleet_watts, d, tr).to_dict() for tr in tracks]
        return to_json(payload)
    return render_rows(rows, fmt)


def cmd_ladder(args, cfg: RunConfig) -> str:
    fmt = cfg.output_format
    rungs = cfg.resolve_rungs()
    if args.figure == "energy-ladder":
        return render_rows(figures.energy_ladder_rows(rungs), fmt)
    grid = heatmap_grid(("superconducting",)) if args.figure == "high-energy-heatmap" else tradeoff_grid(("superconducting",))
    grid = replace(grid, architectures=cfg.resolve_architectures())
    reports = ladder_sweep(rungs, grid, _template(cfg), cfg.gate_floor_power, cfg.workers)
    return render_fleet(reports, fmt)


def cmd_verify(args, cfg: RunConfig) -> tuple[str, bool]:
    results = run_all(seed=cfg.seed, mc_samples=args.mc_samples)
    ok = all(r.passed for r in results)
    if cfg.output_format == "json":
        text = to_json([r.__dict__ for r in results])
    else:
        text = "\n".join(r.line() for r in results) + "\n"
    return text, ok


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args)
        if args.command == "verify":
            text, ok = cmd_verify(args, cfg)
            write_text(text, cfg.output_path)
            return 0 if ok else 1
        handler = {
            "ledger": cmd_ledger,
            "estimate": cmd_estimate,
            "sweep": cmd_sweep,
            "baseline": cmd_baseline,
            "ladder": cmd_ladder,
        }[args.command]
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            text = handler(args, cfg)
        write_text(text, cfg.output_path)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""End-to-end acceptance checks; the conftest prints one PASS/FAIL line per criterion."""

from __future__ import annotations

import itertools
import math
import time

import pytest

from groverfleet.cli import main
from groverfleet.cli_io.reports import render_fleet
from groverfleet.energy import S9, S19, S21, fleet_power, network_power, quantum_classical_ratio
from groverfleet.fleet_planner import SweepCell, SweepGrid, evaluate_cell, heatmap_grid, run_sweep, scenario_scaling
from groverfleet.hash_ledger import AdderModel, ToffoliSynthesis, double_sha256_ledger, p2pkh_ledger, ripemd160_ledger
from groverfleet.hesc_ladder import LADDER, LOW_TIERS, RUNGS, ladder_sweep, per_rung_reductions
from groverfleet.mining_model import (
    MAINNET_DIFFICULTY_2025,
    OracleSpec,
    difficulty_to_bits,
    plan_grover,
    search_from_difficulty,
    search_spec,
)
from groverfleet.surface_code import (
    ION_TRAP,
    NEUTRAL_ATOM,
    SUPERCONDUCTING,
    FailureBudgetMode,
    WidthMode,
    machine_footprint,
)
from groverfleet.verify import check_grover, check_hash_vectors, check_monte_carlo

acceptance = pytest.mark.acceptance


# 1 ------------------------------------------------------------------------

@acceptance(1)
def test_double_sha256_ledger_exact():
    led = double_sha256_ledger()
    assert led.adders == 1800
    assert led.boolean_toffolis == 18432
    assert led.total_toffolis == 131832
    assert led.t_count == 304128
    assert double_sha256_ledger(synth=ToffoliSynthesis.STANDARD).t_count - led.t_count == 395496
    assert led.t_depth == 114360
    assert led.t_depth - double_sha256_ledger(AdderModel.GIDNEY_SCHEDULED).t_depth == 54000
    assert led.t_depth - double_sha256_ledger(AdderModel.CARRY_SAVE).t_depth == 66288
    assert led.cnots == 402408
    assert led.logical_width == 833


@acceptance(1)
def test_double_sha256_ledger_fast():
    double_sha256_ledger()
    t0 = time.perf_counter()
    for _ in range(100):
        double_sha256_ledger()
    assert (time.perf_counter() - t0) / 100 < 1e-3


# 2 ------------------------------------------------------------------------

@acceptance(2)
def test_ripemd160_forward_exact():
    led = ripemd160_ledger()
    assert (led.adders, led.boolean_toffolis, led.total_toffolis, led.t_count, led.cnots) == (650, 4096, 45046, 99584, 110242)


@acceptance(2)
def test_p2pkh_exact():
    led = p2pkh_ledger()
    std = p2pkh_ledger(synth=ToffoliSynthesis.STANDARD)
    assert led.logical_width == 1153
    assert led.t_count == 200960
    assert std.t_count - led.t_count == 266970
    assert led.cnots == 244378


# 3 ------------------------------------------------------------------------

def _difficulty_one(include_diffusion: bool):
    oracle = OracleSpec(include_diffusion=include_diffusion)
    plan = plan_grover(search_from_difficulty(256, 1.0), oracle, SUPERCONDUCTING.tau_s)
    return plan, machine_footprint(plan, SUPERCONDUCTING)


@acceptance(3)
def test_difficulty_one_footprint():
    plan, fp = _difficulty_one(include_diffusion=True)
    assert plan.r_ideal.value == 51472
    assert fp.code_distance == 23
    assert fp.data_qubits.value == pytest.approx(1.2e6, rel=0.05)
    assert fp.total_qubits.value == pytest.approx(1.6e6, rel=0.10)
    assert 8.0e3 / 2 <= fp.runtime_seconds.value <= 8.0e3 * 2


@acceptance(3)
def test_difficulty_one_factories():
    _, without = _difficulty_one(include_diffusion=False)
    _, with_diff = _difficulty_one(include_diffusion=True)
    assert without.factory_count == 614
    # "about 610" with the diffusion layer included
    assert with_diff.factory_count == pytest.approx(610, rel=0.02)


# 4 ------------------------------------------------------------------------

@acceptance(4)
def test_p2pkh_footprint():
    plan = plan_grover(search_spec(160, 160.0), OracleSpec.p2pkh(), SUPERCONDUCTING.tau_s)
    fp = machine_footprint(plan, SUPERCONDUCTING)
    assert plan.r_ideal.value == pytest.approx(9.5e23, rel=0.005)
    assert fp.code_distance == 61
    assert fp.data_qubits.value == pytest.approx(1.0e7, rel=0.05)
    assert fp.factory_count == pytest.approx(1.5e3, rel=0.10)
    assert fp.total_qubits.value == pytest.approx(1.7e7, rel=0.10)


# 5 ------------------------------------------------------------------------

SCENARIO_TABLE = {
    ("true_preimage", 0.5): (69.47, 75.58),
    ("true_preimage", 0.99): (70.29, 76.40),
    ("partial_le_2^32", 0.5): (59.84, 65.95),
    ("partial_le_2^32", 0.99): (60.66, 66.77),
    ("partial_2^33_2^96", 0.5): (40.57, 46.68),
    ("partial_2^33_2^96", 0.99): (41.39, 47.51),
    ("partial_gt_2^96", 0.5): (2.04, 8.15),
    ("partial_gt_2^96", 0.99): (2.86, 8.97),
}


@acceptance(5)
def test_scenario_rows():
    rows = scenario_scaling(600.0)
    assert len(rows) == 8
    for row in rows:
        machines, qubits = SCENARIO_TABLE[(row.regime, row.target_success)]
        assert abs(row.report.n_machines.log10 - machines) <= 0.02, row.regime
        assert abs(row.report.fleet_qubits.log10 - qubits) <= 0.02, row.regime


@acceptance(5)
def test_scenario_60s_shift():
    rows = {(r.regime, r.target_success): r for r in scenario_scaling(60.0)}
    assert rows[("true_preimage", 0.5)].report.n_machines.log10 == pytest.approx(71.5, abs=0.05)


@acceptance(5)
def test_scenario_sweep_fast():
    t0 = time.perf_counter()
    scenario_scaling(600.0)
    scenario_scaling(60.0)
    assert time.perf_counter() - t0 < 1.0


# 6 ------------------------------------------------------------------------

FAILURE_BUDGET_TABLE = [
    (SUPERCONDUCTING, 60.0, 19, 23, 8.29e5, 1.29e6, 1.55),
    (NEUTRAL_ATOM, 60.0, 13, 17, 4.25e5, 7.65e5, 1.80),
    (ION_TRAP, 60.0, 9, 11, 2.27e5, 3.46e5, 1.53),
    (SUPERCONDUCTING, 600.0, 21, 25, 1.04e6, 1.56e6, 1.50),
    (NEUTRAL_ATOM, 600.0, 15, 19, 5.81e5, 9.80e5, 1.69),
    (ION_TRAP, 600.0, 9, 11, 2.27e5, 3.46e5, 1.53),
]


@acceptance(6)
@pytest.mark.parametrize("arch,t_cap,d_t,d_v,q_t,q_v,inflation", FAILURE_BUDGET_TABLE, ids=lambda v: getattr(v, "name", None))
def test_failure_budget_row(arch, t_cap, d_t, d_v, q_t, q_v, inflation):
    plan = plan_grover(search_spec(256, 256.0), OracleSpec(), arch.tau_s, t_cap)
    t = machine_footprint(plan, arch, FailureBudgetMode.T_COUNT_PROXY, WidthMode.ORACLE_ONLY)
    v = machine_footprint(plan, arch, FailureBudgetMode.VOLUME_PROXY, WidthMode.ORACLE_ONLY)
    assert (t.code_distance, v.code_distance) == (d_t, d_v)
    assert t.total_qubits.value == pytest.approx(q_t, rel=0.02)
    assert v.total_qubits.value == pytest.approx(q_v, rel=0.02)
    assert abs(v.total_qubits.value / t.total_qubits.value - inflation) <= 0.05


# 7 ------------------------------------------------------------------------

@acceptance(7)
@pytest.mark.parametrize("bits,megawatts", [(32.0, 9.5e3), (64.0, 4.1e13), (96.0, 1.7e23)])
def test_fleet_power_anchor(bits, megawatts):
    rep = evaluate_cell(SweepCell(bits, 600.0, 0.5))
    assert rep.fleet_watts.value / 1e6 == pytest.approx(megawatts, rel=0.05)


@acceptance(7)
def test_mainnet_classical_power():
    for track in (S9, S19, S21):
        assert 6e9 <= network_power(MAINNET_DIFFICULTY_2025, track) <= 7e10, track.name


@acceptance(7)
def test_mainnet_quantum_classical_ratio():
    bits = difficulty_to_bits(MAINNET_DIFFICULTY_2025).bits
    rep = evaluate_cell(SweepCell(bits, 600.0, 0.99))
    for track in (S9, S19, S21):
        ratio = quantum_classical_ratio(rep.fleet_watts, network_power(MAINNET_DIFFICULTY_2025, track))
        assert ratio.log10 >= 14.0, track.name


# 8 ------------------------------------------------------------------------

LADDER_TABLE = {
    "surface_mw_5GHz": (2.000e-10, 9.543e-03, 1.00e00),
    "surface_thz_10meV": (4.136e-13, 1.973e-05, 2.42e03),
    "surface_opt_2eV": (2.068e-15, 9.866e-08, 1.00e05),
    "surface_xray_10keV": (4.136e-19, 1.973e-11, 1.00e08),
    "surface_nuclear_1MeV": (4.136e-21, 1.973e-13, 4.00e09),
    "surface_qcd_100MeV": (4.136e-23, 1.973e-15, 1.00e11),
    "surface_ew_100GeV": (4.136e-26, 1.973e-18, 1.00e14),
    "surface_tev_1TeV": (4.136e-27, 1.973e-19, 1.00e15),
    "surface_gut_1e16GeV": (4.136e-34, 1.973e-26, 1.00e22),
    "surface_planck": (3.387e-43, 1.616e-35, 1.22e31),
}


@acceptance(8)
def test_ladder_tau0_and_length():
    for rung in LADDER:
        tau0, ell, _ = LADDER_TABLE[rung.tag]
        assert rung.tau0_s == pytest.approx(tau0, rel=5e-3), rung.tag
        assert rung.length_m == pytest.approx(ell, rel=5e-3), rung.tag


@acceptance(8)
def test_ladder_speedup_column():
    bad = []
    for rung in LADDER:
        want = LADDER_TABLE[rung.tag][2]
        if not math.isclose(rung.speedup, want, rel_tol=5e-3):
            bad.append(f"{rung.tag}: {rung.speedup:.4g} vs {want:.3g}")
    assert not bad, "; ".join(bad)


@acceptance(8)
def test_ladder_microwave_matches_baseline():
    grid = SweepGrid((32.0, 64.0, 78.6, 128.0, 256.0), (0.1, 60.0, 600.0), (0.5, 0.99), ("superconducting", "neutral_atom"))
    base = render_fleet(run_sweep(grid), "csv")
    mw = ladder_sweep([RUNGS["surface_mw_5GHz"]], grid)
    lines = render_fleet(mw, "csv").splitlines()
    col = lines[0].split(",").index("rung_tag")
    stripped = "\n".join(",".join(f for i, f in enumerate(line.split(",")) if i != col) for line in lines) + "\n"
    assert stripped == base


@acceptance(8)
def test_ladder_low_tier_reduction_at_most_one_decade():
    grid = heatmap_grid(("superconducting",))
    assert min(grid.bits) < 78.6 < max(grid.bits)
    reports = ladder_sweep(LOW_TIERS, grid)
    steps = per_rung_reductions(reports, [r.tag for r in LOW_TIERS])
    too_big = [f"{lo}->{hi}: {drop:.2f}" for lo, hi, drop in steps if drop > 1.1]
    assert not too_big, "; ".join(too_big)


# 9 ------------------------------------------------------------------------

@acceptance(9)
def test_oracle_suite():
    t0 = time.perf_counter()
    grover = check_grover(max_bits=12, tol=1e-9)
    hashes = check_hash_vectors()
    mc = check_monte_carlo(bits=(4, 8, 16))
    elapsed = time.perf_counter() - t0
    failures = [r.line() for r in itertools.chain(grover, hashes, mc) if not r.passed]
    assert not failures, failures
    assert {r.name for r in mc} == {"b4", "b8", "b16"}
    assert elapsed < 60.0


# 10 -----------------------------------------------------------------------

@acceptance(10)
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_sweep_determinism(tmp_path, fmt):
    cfg = tmp_path / "run.ini"
    cfg.write_text(
        "[sweep]\nbits = 16:256:48\nt_caps = 1, 60, 600\ntargets = 0.5, 0.99\n"
        "architectures = superconducting, neutral_atom, ion_trap\n[run]\nseed = 11\n"
    )
    outs = []
    for i, workers in enumerate((1, 1, 2)):
        out = tmp_path / f"o{i}.{fmt}"
        assert main(["sweep", "--config", str(cfg), "--format", fmt, "--seed", "11", "--workers", str(workers), "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] == outs[2]
    assert len(outs[0]) > 100

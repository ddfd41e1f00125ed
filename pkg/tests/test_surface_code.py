from __future__ import annotations

import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from groverfleet.errors import AboveThresholdError, InvalidInputError
from groverfleet.lognum import LogQuantity
from groverfleet.mining_model import OracleSpec, plan_grover, search_from_difficulty, search_spec
from groverfleet.surface_code import (
    ION_TRAP,
    NEUTRAL_ATOM,
    PRESETS,
    SUPERCONDUCTING,
    ArchitectureSpec,
    architectures_from_ini,
    factory_count,
    log10_logical_error_rate,
    logical_error_rate,
    logical_width,
    machine_footprint,
    required_distance,
)


def test_presets():
    assert (SUPERCONDUCTING.tau_s, SUPERCONDUCTING.layout_lambda, SUPERCONDUCTING.p_phys) == (1e-6, 2.0, 1e-3)
    assert (NEUTRAL_ATOM.tau_s, NEUTRAL_ATOM.layout_lambda, NEUTRAL_ATOM.p_phys) == (2e-6, 2.5, 5e-4)
    assert (ION_TRAP.tau_s, ION_TRAP.layout_lambda, ION_TRAP.p_phys) == (10e-6, 3.0, 1e-4)
    assert (SUPERCONDUCTING.watts_per_qubit, SUPERCONDUCTING.wall_plug_efficiency) == (12.0, 0.18)


def test_logical_error_rate_examples():
    assert logical_error_rate(1e-3, 23) == pytest.approx(1e-13, rel=1e-12)
    assert logical_error_rate(1e-4, 9) == pytest.approx(1e-11, rel=1e-12)
    assert logical_error_rate(9.99e-3, 3) == pytest.approx(0.1 * 0.999**2, rel=1e-12)


def test_above_threshold():
    with pytest.raises(AboveThresholdError):
        logical_error_rate(0.01, 5)
    with pytest.raises(AboveThresholdError):
        ArchitectureSpec("bad", 1e-6, 2.0, 0.02, 1.0, 0.5)
    with pytest.raises(InvalidInputError):
        logical_error_rate(1e-3, 4)


@given(st.floats(1e-7, 9.9e-3), st.integers(1, 2000).map(lambda k: 2 * k + 1))
def test_log_error_rate_against_mpmath(p, d):
    want = mpmath.log10(mpmath.mpf("0.1") * (100 * mpmath.mpf(p)) ** ((d + 1) // 2))
    assert log10_logical_error_rate(p, d) == pytest.approx(float(want), abs=1e-9)


def test_required_distance_examples():
    dummy = LogQuantity.one()
    assert required_distance(LogQuantity.from_value(3.152e10), 1, dummy, 1e-3) == 23
    assert required_distance(LogQuantity.from_value(3.84e29), 1, dummy, 1e-3) == 61


def test_required_distance_volume_example():
    t = required_distance(LogQuantity.from_value(1.604e8), 833, LogQuantity.from_value(5.99e7), 1e-3, "t_count")
    v = required_distance(LogQuantity.from_value(1.604e8), 833, LogQuantity.from_value(5.99e7), 1e-3, "volume")
    assert (t, v) == (19, 23)


@given(st.floats(0, 300), st.sampled_from([1e-3, 5e-4, 1e-4, 5e-3]))
def test_required_distance_minimal(log10_t, p):
    t_tot = LogQuantity.from_log10(log10_t)
    d = required_distance(t_tot, 1, LogQuantity.one(), p)
    target = math.log10(0.01) - log10_t
    assert log10_logical_error_rate(p, d) <= target
    if d > 3:
        assert log10_logical_error_rate(p, d - 2) > target


def test_factory_count_forms_agree():
    plan = plan_grover(search_from_difficulty(256, 1.0), OracleSpec(include_diffusion=False), 1e-6)
    direct = factory_count(plan.t_tot, plan.runtime_seconds, 23, 1e-6)
    assert direct == 614
    with pytest.raises(InvalidInputError):
        factory_count(plan.t_tot, 0.0, 23, 1e-6)


def test_difficulty_one_footprint():
    plan = plan_grover(search_from_difficulty(256, 1.0), OracleSpec(include_diffusion=False), 1e-6)
    fp = machine_footprint(plan, SUPERCONDUCTING)
    assert fp.code_distance == 23
    assert fp.logical_width == 1122
    assert fp.data_qubits.value == 2 * 23**2 * 1122
    assert fp.factory_count == 614
    assert fp.factory_qubits.value == 1.25 * 23**2 * 614
    assert fp.total_qubits.value == pytest.approx(1.6e6, rel=0.01)


def test_footprint_sum_reconciles():
    plan = plan_grover(search_spec(160, 160), OracleSpec.p2pkh(), 1e-6)
    fp = machine_footprint(plan, SUPERCONDUCTING)
    want = math.log10(fp.data_qubits.value + fp.factory_qubits.value)
    assert fp.total_qubits.log10 == pytest.approx(want, rel=1e-10)
    assert fp.logical_width == 1346


def test_oracle_only_600s():
    plan = plan_grover(search_spec(256, 256), OracleSpec(), 1e-6, 600.0)
    fp = machine_footprint(plan, SUPERCONDUCTING, "t_count", "oracle_only")
    assert fp.logical_width == 833
    assert fp.total_qubits.value == pytest.approx(1.04e6, rel=0.01)


@pytest.mark.parametrize("arch", [SUPERCONDUCTING, NEUTRAL_ATOM, ION_TRAP])
@pytest.mark.parametrize("cap", [60.0, 600.0])
def test_volume_inflation_below_two(arch, cap):
    plan = plan_grover(search_spec(256, 256), OracleSpec(), arch.tau_s, cap)
    t = machine_footprint(plan, arch, "t_count", "oracle_only").total_qubits.value
    v = machine_footprint(plan, arch, "volume", "oracle_only").total_qubits.value
    assert 1.0 <= v / t <= 2.0


def test_infeasible_plan_has_no_footprint():
    plan = plan_grover(search_spec(256, 32), OracleSpec(), 1e-6, 0.01)
    assert machine_footprint(plan, SUPERCONDUCTING) is None


def test_tau_mismatch_rejected():
    plan = plan_grover(search_spec(256, 32), OracleSpec(), 1e-6)
    with pytest.raises(InvalidInputError):
        machine_footprint(plan, ION_TRAP)


def test_width_modes():
    assert logical_width(OracleSpec(), "full") == 833 + 256 + 33
    assert logical_width(OracleSpec.p2pkh(), "full") == 1346
    assert logical_width(OracleSpec.p2pkh(), "oracle_only") == 1153


def test_ini_overrides():
    table = architectures_from_ini("[arch.ion_trap]\np_phys = 2e-4\n[arch.mine]\ntau_s=1e-7\nlambda=2\np_phys=1e-3\nwatts_per_qubit=1\nefficiency=0.5\n")
    assert table["ion_trap"].p_phys == 2e-4 and table["ion_trap"].tau_s == 10e-6
    assert table["mine"].tau_s == 1e-7
    assert PRESETS["ion_trap"].p_phys == 1e-4
    with pytest.raises(InvalidInputError, match="arch.x.bogus"):
        architectures_from_ini("[arch.x]\nbogus = 1\n")
    with pytest.raises(InvalidInputError, match="missing"):
        architectures_from_ini("[arch.new]\ntau_s = 1e-6\n")

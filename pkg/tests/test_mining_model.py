from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groverfleet.errors import InvalidInputError
from groverfleet.mining_model import (
    T1,
    OracleSpec,
    bits_to_difficulty,
    capped_iterations,
    difficulty_to_bits,
    diffusion_tcount,
    grover_iterations,
    hash_work_factor,
    marked_states,
    oracle_tcount,
    oracle_tdepth,
    plan_grover,
    search_from_difficulty,
    search_spec,
    single_machine_success,
)
from groverfleet.lognum import LogQuantity

mpmath.mp.dps = 60

# mpmath oracles, frozen.
P1_B256_600S = 2.3776196e-70  # sin^2(5247 * asin(2^-128))
P1_B32_600S = 0.0063963779  # sin^2(5247 * asin(2^-16))


def _mp_success(r: int, log2_ratio: int) -> float:
    theta = mpmath.asin(mpmath.sqrt(mpmath.mpf(2) ** log2_ratio))
    return float(mpmath.sin((2 * r + 1) * theta) ** 2)


def test_frozen_oracles_match_mpmath():
    assert _mp_success(2623, -256) == pytest.approx(P1_B256_600S, rel=1e-7)
    assert _mp_success(2623, -32) == pytest.approx(P1_B32_600S, rel=1e-8)


def test_difficulty_one_is_about_32_bits():
    spec = difficulty_to_bits(1.0)
    assert spec.bits == pytest.approx(32.0000220, abs=1e-6)
    assert bits_to_difficulty(spec.bits).difficulty == pytest.approx(1.0, rel=1e-12)


def test_mainnet_bits():
    assert difficulty_to_bits(1.1e14).bits == pytest.approx(78.6445, abs=1e-4)


@given(st.floats(min_value=1e-3, max_value=1e30))
def test_bits_round_trip(d):
    assert bits_to_difficulty(difficulty_to_bits(d).bits).difficulty == pytest.approx(d, rel=1e-9)


def test_marked_states_clamp():
    assert marked_states(256, 1.0).log2 == pytest.approx(math.log2(T1), abs=1e-9)
    assert search_spec(256, 300).marked.log2 == 0.0
    assert search_spec(16, 0).marked.log2 == 16.0
    with pytest.raises(InvalidInputError):
        difficulty_to_bits(0.0)


def test_iterations_difficulty_one():
    assert grover_iterations(search_from_difficulty(256, 1.0)).value == 51472


def test_iterations_exact_2_224_marked():
    # M = 2^224 exactly: pi / (4 asin 2^-16) - 1/2 = 51471.35...
    assert grover_iterations(search_spec(256, 32)).value == 51471


def test_iterations_true_preimage_log_domain():
    r = grover_iterations(search_spec(256, 256))
    want = mpmath.pi / (4 * mpmath.asin(mpmath.mpf(2) ** -128)) - 0.5
    assert r.log10 == pytest.approx(float(mpmath.log10(want)), abs=1e-12)


def test_p2pkh_iterations():
    r = grover_iterations(search_spec(160, 160))
    assert r.value == pytest.approx(9.5e23, rel=5e-3)


@settings(max_examples=60)
@given(st.integers(min_value=2, max_value=256), st.floats(min_value=0, max_value=1))
def test_iterations_against_mpmath(n, frac):
    bits = frac * n
    spec = search_spec(n, bits)
    got = grover_iterations(spec)
    theta = mpmath.asin(mpmath.sqrt(mpmath.mpf(2) ** spec.log2_ratio))
    want = max(1, int(mpmath.nint(mpmath.pi / (4 * theta) - mpmath.mpf(1) / 2)))
    if want < 10**15:
        assert abs(got.value - want) <= 1
    else:
        assert got.log10 == pytest.approx(float(mpmath.log10(want)), abs=1e-9)


def test_oracle_costs_header():
    o = OracleSpec()
    assert oracle_tcount(o) == 2 * 304128 + 2 * 128 * 8 + 8 * 254 == 612336
    assert oracle_tdepth(o) == 228720
    assert oracle_tcount(OracleSpec(include_diffusion=False)) == 612336 - 2032


def test_oracle_depth_extras():
    o = OracleSpec(depth_extras=True)
    assert oracle_tdepth(o) == 228720 + 2 * 63 * 8 + 2 * 254


def test_oracle_costs_p2pkh():
    o = OracleSpec.p2pkh()
    assert oracle_tcount(o) == 404464
    assert oracle_tdepth(o) == 159164


def test_work_factor():
    assert hash_work_factor(1, 2000) == 13
    assert hash_work_factor(1, 512) == 11
    assert hash_work_factor(0, None, Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(InvalidInputError):
        hash_work_factor(1, 10, Fraction(1, 2))
    with pytest.raises(InvalidInputError):
        hash_work_factor(2)


@given(st.integers(1, 10**6))
def test_work_factor_uses_exact_ceil_log2(n_tx):
    want = 2 + int(mpmath.ceil(mpmath.log(n_tx, 2)))
    assert hash_work_factor(1, n_tx) == want


def test_diffusion_small_registers():
    assert diffusion_tcount(1) == 0
    assert diffusion_tcount(2) == 0
    assert diffusion_tcount(256) == 2032


def test_capped_plan_true_preimage():
    plan = plan_grover(search_spec(256, 256), OracleSpec(), 1e-6, 600.0)
    assert plan.r_cap.value == 2623
    assert plan.p1.value == pytest.approx(P1_B256_600S, rel=1e-6)
    assert plan.t_tot.value == 2623 * 612336


def test_capped_plan_b32():
    plan = plan_grover(search_spec(256, 32), OracleSpec(), 1e-6, 600.0)
    assert plan.p1.value == pytest.approx(P1_B32_600S, rel=1e-7)


def test_infeasible_cap():
    plan = plan_grover(search_spec(256, 32), OracleSpec(), 1e-6, 0.1)
    assert not plan.feasible and plan.p1 is None


def test_capped_iterations_validation():
    with pytest.raises(InvalidInputError):
        capped_iterations(LogQuantity.one(), 0.0, 1.0)


@settings(max_examples=100)
@given(st.integers(0, 5000), st.integers(-250, -41))
def test_small_angle_success_against_mpmath(r, log2_ratio):
    spec = search_spec(256, -log2_ratio)
    got = single_machine_success(LogQuantity.from_value(r), spec) if r else None
    if r == 0:
        return
    want = _mp_success(r, log2_ratio)
    assert got.log10 == pytest.approx(math.log10(want), abs=1e-9)


@settings(max_examples=100)
@given(st.integers(1, 3000), st.integers(-40, -1))
def test_large_angle_success_against_mpmath(r, log2_ratio):
    spec = search_spec(256, -log2_ratio)
    got = single_machine_success(LogQuantity.from_value(r), spec).value
    assert got == pytest.approx(_mp_success(r, log2_ratio), abs=1e-9)

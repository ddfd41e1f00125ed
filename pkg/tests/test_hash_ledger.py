from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from groverfleet.errors import InvalidInputError
from groverfleet.hash_ledger import (
    AdderModel,
    GateLedger,
    ToffoliSynthesis,
    adder_costs,
    comparator_chunks,
    double_sha256_ledger,
    p2pkh_ledger,
    pipeline_ledger,
    ripemd160_ledger,
    sha256_compression_ledger,
    sha256_ledger,
)

widths = st.integers(min_value=1, max_value=512)


def test_adder_cdkm_32():
    c = adder_costs(AdderModel.CDKM_BASELINE, 32)
    assert (c.toffolis, c.cnots, c.t_count, c.t_depth_layers) == (63, 157, 128, 63)


def test_adder_gidney_depth():
    assert adder_costs(AdderModel.GIDNEY_SCHEDULED, 32).t_depth_layers == 33


@given(widths)
def test_adder_closed_forms(n):
    c = adder_costs(AdderModel.CDKM_BASELINE, n)
    assert c.toffolis == 2 * n - 1
    assert c.cnots == 5 * n - 3
    assert c.t_count == 4 * n
    assert c.t_depth_layers == 2 * n - 1
    assert adder_costs(AdderModel.GIDNEY_SCHEDULED, n).t_depth_layers == n + 1


def test_adder_rejects_zero_width():
    with pytest.raises(InvalidInputError):
        adder_costs(AdderModel.CDKM_BASELINE, 0)


def test_single_compression_block():
    led = sha256_compression_ledger(1)
    assert led.adders == 592
    assert led.boolean_toffolis == 6144
    assert led.cnots == 592 * 157 + 21504 + 3 * 6144


def test_double_sha_relative_phase():
    led = double_sha256_ledger()
    assert led.to_dict() == {
        "adders": 1800,
        "boolean_toffolis": 18432,
        "total_toffolis": 131832,
        "t_count": 304128,
        "t_depth": 114360,
        "cnots": 402408,
        "logical_width": 833,
    }


def test_double_sha_adder_deltas():
    base = double_sha256_ledger().t_depth
    assert base - double_sha256_ledger(AdderModel.GIDNEY_SCHEDULED).t_depth == 54000
    assert base - double_sha256_ledger(AdderModel.CARRY_SAVE).t_depth == 66288


def test_standard_synthesis_penalty():
    rel = double_sha256_ledger()
    std = double_sha256_ledger(synth=ToffoliSynthesis.STANDARD)
    assert std.t_count - rel.t_count == 395496 == 3 * rel.total_toffolis


def test_ripemd_forward():
    led = ripemd160_ledger()
    assert (led.adders, led.boolean_toffolis, led.total_toffolis, led.t_count, led.cnots) == (650, 4096, 45046, 99584, 110242)
    assert led.logical_width == 897


def test_p2pkh():
    led = p2pkh_ledger()
    assert led.logical_width == 1153
    assert led.t_count == 200960
    assert led.cnots == 244378
    std = p2pkh_ledger(synth="standard")
    assert std.t_count - led.t_count == 266970


def test_p2pkh_is_sha_plus_ripemd():
    led = p2pkh_ledger()
    parts = sha256_ledger(1) + ripemd160_ledger()
    assert led.t_count == parts.t_count and led.adders == parts.adders


@pytest.mark.parametrize("model", list(AdderModel))
@pytest.mark.parametrize("synth", list(ToffoliSynthesis))
def test_t_count_composition(model, synth):
    led = pipeline_ledger("double_sha256_header", model, synth)
    want = 128 * led.adders + 4 * led.boolean_toffolis
    if synth is ToffoliSynthesis.STANDARD:
        want += 3 * led.total_toffolis
    if model is AdderModel.CARRY_SAVE:
        want -= 3 * 8192
    assert led.t_count == want


@given(st.integers(1, 6))
def test_compression_scales_with_blocks(k):
    one = sha256_compression_ledger(1)
    many = sha256_compression_ledger(k)
    assert many.t_count == k * one.t_count
    assert many.logical_width == one.logical_width


def test_ledger_add_takes_max_width():
    a = GateLedger(adders=1, logical_width=10)
    b = GateLedger(adders=2, logical_width=7)
    assert (a + b).adders == 3 and (a + b).logical_width == 10


def test_comparator_chunks():
    assert comparator_chunks(256) == 8
    assert comparator_chunks(160) == 5

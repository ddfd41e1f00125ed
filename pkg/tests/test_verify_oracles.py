from __future__ import annotations

import hashlib

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groverfleet.errors import CapacityError, ImpracticalSamplingError, InvalidInputError
from groverfleet.verify import (
    RIPEMD160_VECTORS,
    SHA256_VECTORS,
    MarkedSet,
    check_grover,
    closed_form_success,
    double_sha256,
    grover_simulate,
    grover_trace,
    monte_carlo_hit_rate,
    p2pkh_hash,
    ripemd160_digest,
    sha256_digest,
)

# mpmath, 30 digits: sin^2(7 asin(1/4))
N4_M1_R3 = 0.9613189697265625


@pytest.mark.parametrize("msg,want", [v for v in SHA256_VECTORS if len(v[0]) < 1000])
def test_sha256_vectors(msg, want):
    assert sha256_digest(msg).hex() == want


@pytest.mark.parametrize("msg,want", [v for v in RIPEMD160_VECTORS if len(v[0]) < 1000])
def test_ripemd160_vectors(msg, want):
    assert ripemd160_digest(msg).hex() == want


@settings(max_examples=60)
@given(st.binary(max_size=300))
def test_sha256_matches_hashlib(msg):
    assert sha256_digest(msg) == hashlib.sha256(msg).digest()
    assert double_sha256(msg) == hashlib.sha256(hashlib.sha256(msg).digest()).digest()


def test_p2pkh_composition():
    key = bytes.fromhex("02" + "11" * 32)
    assert p2pkh_hash(key) == ripemd160_digest(hashlib.sha256(key).digest())


def test_grover_small_cases():
    assert grover_simulate(MarkedSet.first(2, 1), 1) == pytest.approx(1.0, abs=1e-12)
    assert grover_simulate(MarkedSet.first(4, 1), 3) == pytest.approx(N4_M1_R3, abs=1e-12)
    assert grover_simulate(MarkedSet.first(3, 8), 5) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 10), st.data())
def test_grover_matches_closed_form(n, data):
    size = 1 << n
    idx = data.draw(st.sets(st.integers(0, size - 1), min_size=1, max_size=min(size, 16)))
    r = data.draw(st.integers(0, 40))
    sim, norms = grover_trace(MarkedSet(n, frozenset(idx)), r)
    want = np.array([closed_form_success(n, len(idx), k) for k in range(r + 1)])
    assert np.max(np.abs(sim - want)) <= 1e-9
    assert np.max(np.abs(norms - 1.0)) <= 1e-12


def test_check_grover_all_pass():
    res = check_grover()
    assert res and all(r.passed for r in res)


def test_simulator_capacity():
    with pytest.raises(CapacityError):
        MarkedSet.first(15, 1)
    with pytest.raises(InvalidInputError):
        MarkedSet(4, frozenset())
    with pytest.raises(InvalidInputError):
        grover_trace(MarkedSet.first(3, 1), -1)


def test_monte_carlo_edge_cases():
    assert monte_carlo_hit_rate(0, 10_000).rate == 1.0
    with pytest.raises(ImpracticalSamplingError):
        monte_carlo_hit_rate(25, 10_000)
    with pytest.raises(InvalidInputError):
        monte_carlo_hit_rate(4, 100)


def test_monte_carlo_reproducible():
    a = monte_carlo_hit_rate(4, 20_000, seed=7)
    b = monte_carlo_hit_rate(4, 20_000, seed=7)
    assert a == b
    assert a.sigma_deviation() <= 4.0

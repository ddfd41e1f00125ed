"""Closed-form gate ledgers for reversible SHA-256 / RIPEMD-160 pipelines.

Counts are modeled per 32-bit CDKM adder and per boolean-layer Toffoli; no
circuits are built.  All integer constants that are calibrated rather than
derived structurally live in :data:`CALIBRATION` so they can be audited in
one place (see ``tests/test_hash_ledger.py`` for the reconciliation checks
that pin them).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from enum import Enum

from groverfleet.errors import InvalidInputError

WORD_BITS = 32


class AdderModel(str, Enum):
    CDKM_BASELINE = "cdkm_baseline"
    GIDNEY_SCHEDULED = "gidney_scheduled"
    CARRY_SAVE = "carry_save"


class ToffoliSynthesis(str, Enum):
    RELATIVE_PHASE = "relative_phase"
    STANDARD = "standard"


class PipelineKind(str, Enum):
    SHA256_COMPRESSION = "sha256_compression"
    DOUBLE_SHA256_HEADER = "double_sha256_header"
    RIPEMD160 = "ripemd160"
    P2PKH = "p2pkh"


# T gates per Toffoli for each synthesis; the difference is the "std" penalty.
T_PER_TOFFOLI = {ToffoliSynthesis.RELATIVE_PHASE: 4, ToffoliSynthesis.STANDARD: 7}
STANDARD_PENALTY_PER_TOFFOLI = 3

CALIBRATION = {
    # CNOTs of relative-phase Toffoli wiring per boolean Toffoli; these two
    # values are the only ones that reconcile the CNOT columns exactly.
    "sha256_bool_wiring_cnots": 3,
    "ripemd160_bool_wiring_cnots": 2,
    # Boolean-layer T-depth per round.  SHA-256: 320 per block reproduces the
    # 112,848 compression depth.  RIPEMD-160 has no published depth; 4 is a
    # model estimate.
    "sha256_bool_tdepth_per_round": 5,
    "ripemd160_bool_tdepth_per_round": 4,
    # Carry-save pipeline, per SHA-256 compression block.
    "carry_save_tcount_delta_per_block": -64 * 128,
    "carry_save_tdepth_delta_per_block": -21_856,
}

SHA256_ROUNDS = 64
SHA256_EXPANSION_START = 16
SHA256_ADDERS_STATE = 7
SHA256_ADDERS_STEADY = 10
SHA256_BOOL_TOFFOLIS_PER_ROUND = 1 * WORD_BITS + 2 * WORD_BITS  # Ch + Maj
SHA256_FEED_FORWARD_ADDERS = 8
# 8 state words, 16-word schedule ring, 2 scratch words, 1 carry ancilla.
SHA256_WIDTH = 8 * 32 + 16 * 32 + 2 * 32 + 1

RIPEMD160_BRANCHES = 2
RIPEMD160_ROUNDS = 80
RIPEMD160_LINEAR_ROUNDS = 16  # f0 rounds per branch carry no Toffolis
RIPEMD160_ADDERS_PER_ROUND = 4
RIPEMD160_FEED_FORWARD_ADDERS = 10
# Two five-word branches, 16-word schedule, 2 scratch words, 1 ancilla.
RIPEMD160_WIDTH = 2 * 5 * 32 + 16 * 32 + 2 * 32 + 1
SHA_DIGEST_BUFFER = 256

# sha256_compression(blocks=...) carries a block count; the others are fixed.
HEADER_BLOCKS = 3  # 80-byte header -> two padded blocks, 32-byte rehash -> one
P2PKH_SHA_BLOCKS = 1  # 33-byte compressed key fits one padded block

OUTPUT_BITS = {
    PipelineKind.SHA256_COMPRESSION: 256,
    PipelineKind.DOUBLE_SHA256_HEADER: 256,
    PipelineKind.RIPEMD160: 160,
    PipelineKind.P2PKH: 160,
}


@dataclass(frozen=True)
class AdderCost:
    """Cost of one n-bit modular addition."""

    toffolis: int
    cnots: int
    t_count: int
    t_depth_layers: int
    ancillas: int


@dataclass(frozen=True)
class GateLedger:
    adders: int = 0
    boolean_toffolis: int = 0
    total_toffolis: int = 0
    t_count: int = 0
    t_depth: int = 0
    cnots: int = 0
    logical_width: int = 0

    def __add__(self, other: GateLedger) -> GateLedger:
        """Sequential composition: counts add, width is the larger peak."""
        return GateLedger(
            adders=self.adders + other.adders,
            boolean_toffolis=self.boolean_toffolis + other.boolean_toffolis,
            total_toffolis=self.total_toffolis + other.total_toffolis,
            t_count=self.t_count + other.t_count,
            t_depth=self.t_depth + other.t_depth,
            cnots=self.cnots + other.cnots,
            logical_width=max(self.logical_width, other.logical_width),
        )

    def times(self, k: int) -> GateLedger:
        return GateLedger(
            adders=k * self.adders,
            boolean_toffolis=k * self.boolean_toffolis,
            total_toffolis=k * self.total_toffolis,
            t_count=k * self.t_count,
            t_depth=k * self.t_depth,
            cnots=k * self.cnots,
            logical_width=self.logical_width,
        )

    def with_width(self, width: int) -> GateLedger:
        return dataclasses.replace(self, logical_width=width)

    def to_dict(self) -> dict[str, int]:
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class HashPipeline:
    kind: PipelineKind = PipelineKind.DOUBLE_SHA256_HEADER
    blocks: int = 1  # only read for SHA256_COMPRESSION

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", PipelineKind(self.kind))
        if self.blocks < 1:
            raise InvalidInputError(f"blocks must be >= 1, got {self.blocks}")

    @property
    def output_bits(self) -> int:
        return OUTPUT_BITS[self.kind]

    @property
    def name(self) -> str:
        if self.kind is PipelineKind.SHA256_COMPRESSION:
            return f"{self.kind.value}[{self.blocks}]"
        return self.kind.value


def adder_costs(model: AdderModel | str, width_bits: int) -> AdderCost:
    """Per-adder counts for an n-bit CDKM ripple under ``model``.

    Gidney's measurement-assisted scheduling keeps the Toffoli and T totals
    but shortens the T-depth from ``2n - 1`` to ``n + 1`` layers.
    """
    model = AdderModel(model)
    if width_bits < 1:
        raise InvalidInputError(f"adder width must be >= 1, got {width_bits}")
    n = width_bits
    depth = n + 1 if model is AdderModel.GIDNEY_SCHEDULED else 2 * n - 1
    return AdderCost(toffolis=2 * n - 1, cnots=5 * n - 3, t_count=4 * n, t_depth_layers=depth, ancillas=1)


def _gidney_depth_saving(width_bits: int = WORD_BITS) -> int:
    base = adder_costs(AdderModel.CDKM_BASELINE, width_bits).t_depth_layers
    return base - adder_costs(AdderModel.GIDNEY_SCHEDULED, width_bits).t_depth_layers


def _adders_only(
    adders: int,
    synth: ToffoliSynthesis,
    depth_per_adder: int,
    width: int,
) -> GateLedger:
    base = adder_costs(AdderModel.CDKM_BASELINE, WORD_BITS)
    toff = adders * base.toffolis
    t = adders * base.t_count
    if synth is ToffoliSynthesis.STANDARD:
        t += STANDARD_PENALTY_PER_TOFFOLI * toff
    return GateLedger(
        adders=adders,
        boolean_toffolis=0,
        total_toffolis=toff,
        t_count=t,
        t_depth=adders * depth_per_adder,
        cnots=adders * base.cnots,
        logical_width=width,
    )


def _feed_forward(adders: int, model: AdderModel, synth: ToffoliSynthesis, width: int) -> GateLedger:
    # Feed-forward adders are plain ripples; under carry-save they are
    # scheduled like Gidney adders (the table lists Delta_G = Delta_CS there).
    depth = adder_costs(AdderModel.CDKM_BASELINE, WORD_BITS).t_depth_layers
    if model is not AdderModel.CDKM_BASELINE:
        depth -= _gidney_depth_saving()
    return _adders_only(adders, synth, depth, width)


def sha256_compression_ledger(
    blocks: int,
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    """Ledger for ``blocks`` SHA-256 compressions (64 rounds each, no feed-forward)."""
    model, synth = AdderModel(model), ToffoliSynthesis(synth)
    if blocks < 1:
        raise InvalidInputError(f"blocks must be >= 1, got {blocks}")
    add = adder_costs(AdderModel.CDKM_BASELINE, WORD_BITS)

    adders = SHA256_EXPANSION_START * SHA256_ADDERS_STATE + (SHA256_ROUNDS - SHA256_EXPANSION_START) * SHA256_ADDERS_STEADY
    boolean = SHA256_ROUNDS * SHA256_BOOL_TOFFOLIS_PER_ROUND
    sigma_cnots = (
        SHA256_EXPANSION_START * 2 * SHA256_BOOL_TOFFOLIS_PER_ROUND
        + (SHA256_ROUNDS - SHA256_EXPANSION_START) * 4 * SHA256_BOOL_TOFFOLIS_PER_ROUND
    )
    total_toff = adders * add.toffolis + boolean
    t_count = adders * add.t_count + T_PER_TOFFOLI[ToffoliSynthesis.RELATIVE_PHASE] * boolean
    t_depth = adders * add.t_depth_layers + SHA256_ROUNDS * CALIBRATION["sha256_bool_tdepth_per_round"]
    cnots = adders * add.cnots + sigma_cnots + CALIBRATION["sha256_bool_wiring_cnots"] * boolean

    if model is AdderModel.GIDNEY_SCHEDULED:
        t_depth -= adders * _gidney_depth_saving()
    elif model is AdderModel.CARRY_SAVE:
        t_count += CALIBRATION["carry_save_tcount_delta_per_block"]
        t_depth += CALIBRATION["carry_save_tdepth_delta_per_block"]
    if synth is ToffoliSynthesis.STANDARD:
        t_count += STANDARD_PENALTY_PER_TOFFOLI * total_toff

    per_block = GateLedger(
        adders=adders,
        boolean_toffolis=boolean,
        total_toffolis=total_toff,
        t_count=t_count,
        t_depth=t_depth,
        cnots=cnots,
        logical_width=SHA256_WIDTH,
    )
    return per_block.times(blocks)


def sha256_feed_forward_ledger(
    stages: int = 1,
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    model, synth = AdderModel(model), ToffoliSynthesis(synth)
    return _feed_forward(stages * SHA256_FEED_FORWARD_ADDERS, model, synth, SHA256_WIDTH)


def sha256_ledger(
    blocks: int = 1,
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    """One SHA-256 hash: ``blocks`` compressions, each followed by its feed-forward."""
    return sha256_compression_ledger(blocks, model, synth) + sha256_feed_forward_ledger(blocks, model, synth)


def double_sha256_ledger(
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    """Block-header oracle: three compressions plus three feed-forward stages."""
    return sha256_ledger(HEADER_BLOCKS, model, synth)


def ripemd160_rounds_ledger(
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    model, synth = AdderModel(model), ToffoliSynthesis(synth)
    add = adder_costs(model, WORD_BITS)
    adders = RIPEMD160_BRANCHES * RIPEMD160_ROUNDS * RIPEMD160_ADDERS_PER_ROUND
    boolean_rounds = RIPEMD160_BRANCHES * (RIPEMD160_ROUNDS - RIPEMD160_LINEAR_ROUNDS)
    boolean = boolean_rounds * WORD_BITS
    total_toff = adders * add.toffolis + boolean
    t_count = adders * add.t_count + T_PER_TOFFOLI[ToffoliSynthesis.RELATIVE_PHASE] * boolean
    if synth is ToffoliSynthesis.STANDARD:
        t_count += STANDARD_PENALTY_PER_TOFFOLI * total_toff
    return GateLedger(
        adders=adders,
        boolean_toffolis=boolean,
        total_toffolis=total_toff,
        t_count=t_count,
        t_depth=adders * add.t_depth_layers + boolean_rounds * CALIBRATION["ripemd160_bool_tdepth_per_round"],
        cnots=adders * add.cnots + CALIBRATION["ripemd160_bool_wiring_cnots"] * boolean,
        logical_width=RIPEMD160_WIDTH,
    )


def ripemd160_feed_forward_ledger(
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    model, synth = AdderModel(model), ToffoliSynthesis(synth)
    return _feed_forward(RIPEMD160_FEED_FORWARD_ADDERS, model, synth, RIPEMD160_WIDTH)


def ripemd160_ledger(
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    """Forward RIPEMD-160 (one 512-bit block): parallel rounds plus feed-forward.

    The T-depth field is a model estimate; no published value anchors it.
    """
    return ripemd160_rounds_ledger(model, synth) + ripemd160_feed_forward_ledger(model, synth)


def p2pkh_ledger(
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    """RIPEMD-160(SHA-256(pubkey)); the 256-qubit digest buffer sits beside RIPEMD's core."""
    sha = sha256_ledger(P2PKH_SHA_BLOCKS, model, synth)
    return (sha + ripemd160_ledger(model, synth)).with_width(RIPEMD160_WIDTH + SHA_DIGEST_BUFFER)


def pipeline_ledger(
    pipeline: HashPipeline | PipelineKind | str,
    model: AdderModel | str = AdderModel.CDKM_BASELINE,
    synth: ToffoliSynthesis | str = ToffoliSynthesis.RELATIVE_PHASE,
) -> GateLedger:
    if not isinstance(pipeline, HashPipeline):
        pipeline = HashPipeline(PipelineKind(pipeline))
    kind = pipeline.kind
    if kind is PipelineKind.SHA256_COMPRESSION:
        return sha256_compression_ledger(pipeline.blocks, model, synth)
    if kind is PipelineKind.DOUBLE_SHA256_HEADER:
        return double_sha256_ledger(model, synth)
    if kind is PipelineKind.RIPEMD160:
        return ripemd160_ledger(model, synth)
    return p2pkh_ledger(model, synth)


def comparator_chunks(output_bits: int) -> int:
    return math.ceil(output_bits / WORD_BITS)

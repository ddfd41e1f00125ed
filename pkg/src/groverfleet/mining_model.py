"""Bitcoin difficulty -> Grover search geometry and per-iteration oracle cost.

Difficulty ``D`` fixes the hit probability ``p = (T1 / 2**256) / D`` and the
difficulty bits ``b = -log2 p``.  Over an ``n``-qubit register the marked
count is ``M = clamp(p * 2**n, 1, 2**n)``.  Angles and probabilities that
underflow a float are carried in log space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from groverfleet.errors import InvalidInputError
from groverfleet.hash_ledger import (
    AdderModel,
    HashPipeline,
    PipelineKind,
    ToffoliSynthesis,
    adder_costs,
    comparator_chunks,
    pipeline_ledger,
    WORD_BITS,
)
from groverfleet.lognum import LOG10_2, LogQuantity, lq_from_log2

# Difficulty-1 target from the compact encoding 0x1d00ffff.
T1 = (2**16 - 1) * 2**208
LOG2_T1 = 208 + math.log2(2**16 - 1)
# Mainnet difficulty on 2025-01-01.
MAINNET_DIFFICULTY_2025 = 1.1e14
MAINNET_BITS_2025 = 78.6

DEFAULT_REGISTER_BITS = 256
# Below this M/N the rotation angle is carried as a log with a series correction.
SMALL_RATIO_LOG2 = -40.0
# Below this (2r+1)*theta the success probability uses the small-angle series.
SMALL_ANGLE = 1e-4
# Comparator: one 32-bit constant-add per digest chunk and direction.
COMPARATOR_T_PER_CHUNK = adder_costs(AdderModel.CDKM_BASELINE, WORD_BITS).t_count

NOTES = {
    "runtime": (
        "logical runtime uses 2x forward T-depth per iteration; the published "
        "difficulty-1 runtime (8.0e3 s) implies ~155k cycles/iteration and is "
        "not reproduced by any adder model"
    ),
}


@dataclass(frozen=True)
class DifficultySpec:
    difficulty: float
    log2_p: float

    @property
    def bits(self) -> float:
        return -self.log2_p

    @property
    def p(self) -> LogQuantity:
        return lq_from_log2(self.log2_p)


def difficulty_to_bits(difficulty: float) -> DifficultySpec:
    if not difficulty > 0 or not math.isfinite(difficulty):
        raise InvalidInputError(f"difficulty must be positive and finite, got {difficulty!r}")
    return DifficultySpec(float(difficulty), LOG2_T1 - 256.0 - math.log2(difficulty))


def bits_to_difficulty(bits: float) -> DifficultySpec:
    """Inverse of :func:`difficulty_to_bits` (``D`` may be below 1)."""
    if not math.isfinite(bits) or bits < 0:
        raise InvalidInputError(f"difficulty bits must be finite and >= 0, got {bits!r}")
    log2_d = bits + LOG2_T1 - 256.0
    d = 2.0**log2_d if log2_d < 1000 else math.inf
    return DifficultySpec(d, -float(bits))


def _check_register(n: int) -> None:
    if not 1 <= n <= 256:
        raise InvalidInputError(f"register bits must be in [1, 256], got {n}")


def marked_states_from_bits(n: int, bits: float) -> LogQuantity:
    _check_register(n)
    return lq_from_log2(min(float(n), max(0.0, n - bits)))


def marked_states(n: int, difficulty: float) -> LogQuantity:
    """``M(n, D) = max(1, min(2**n, (T1 / D) * 2**(n - 256)))``."""
    return marked_states_from_bits(n, difficulty_to_bits(difficulty).bits)


@dataclass(frozen=True)
class SearchSpec:
    register_bits: int
    marked: LogQuantity

    def __post_init__(self) -> None:
        _check_register(self.register_bits)
        if self.marked.log2 < -1e-9 or self.marked.log2 > self.register_bits + 1e-9:
            raise InvalidInputError("marked states must satisfy 1 <= M <= 2**n")

    @property
    def log2_ratio(self) -> float:
        """``log2(M / N)``."""
        return min(0.0, self.marked.log2 - self.register_bits)

    @property
    def theta(self) -> float:
        """Rotation angle ``arcsin(sqrt(M / N))`` (float; see :attr:`log10_theta`)."""
        if self.log2_ratio >= SMALL_RATIO_LOG2:
            return math.asin(math.sqrt(2.0**self.log2_ratio))
        return 10.0**self.log10_theta

    @property
    def log10_theta(self) -> float:
        if self.log2_ratio >= SMALL_RATIO_LOG2:
            return math.log10(self.theta)
        # arcsin(s) = s (1 + s^2/6 + 3 s^4/40 + ...), s^2 = M/N
        x = 2.0**self.log2_ratio
        return 0.5 * self.log2_ratio * LOG10_2 + math.log1p(x / 6.0 + 3.0 * x * x / 40.0) / math.log(10.0)


def search_spec(n: int, bits: float) -> SearchSpec:
    return SearchSpec(n, marked_states_from_bits(n, bits))


def search_from_difficulty(n: int, difficulty: float) -> SearchSpec:
    return SearchSpec(n, marked_states(n, difficulty))


def hash_work_factor(alpha: int, n_tx: int | None = None, beta: float | Fraction = 1) -> Fraction:
    """``k_hash * beta`` with ``k_hash = 1 + alpha (1 + ceil(log2 n_tx))``."""
    if alpha not in (0, 1):
        raise InvalidInputError(f"alpha_merkle must be 0 or 1, got {alpha!r}")
    beta = Fraction(beta).limit_denominator(4)
    if beta not in (Fraction(1), Fraction(1, 2)):
        raise InvalidInputError(f"beta_midstate must be 1 or 1/2, got {beta}")
    if alpha == 1:
        if beta != 1:
            raise InvalidInputError("midstate reuse (beta=1/2) is incompatible with Merkle recomputation")
        if n_tx is None or n_tx < 1:
            raise InvalidInputError(f"n_tx must be >= 1 when alpha_merkle=1, got {n_tx!r}")
        # (n - 1).bit_length() == ceil(log2 n) without float round-off
        return Fraction(2 + (n_tx - 1).bit_length()) * beta
    return beta


@dataclass(frozen=True)
class OracleSpec:
    pipeline: HashPipeline = field(default_factory=HashPipeline)
    alpha_merkle: int = 0
    n_tx: int = 1
    beta_midstate: Fraction = Fraction(1)
    register_bits: int = DEFAULT_REGISTER_BITS
    adder_model: AdderModel = AdderModel.CDKM_BASELINE
    synthesis: ToffoliSynthesis = ToffoliSynthesis.RELATIVE_PHASE
    include_diffusion: bool = True
    depth_extras: bool = False
    # Constant-factor oracle-call overhead for fixed-point amplitude amplification.
    fixed_point_factor: float = 1.0

    def __post_init__(self) -> None:
        pipe = self.pipeline
        if not isinstance(pipe, HashPipeline):
            pipe = HashPipeline(PipelineKind(pipe))
        object.__setattr__(self, "pipeline", pipe)
        object.__setattr__(self, "adder_model", AdderModel(self.adder_model))
        object.__setattr__(self, "synthesis", ToffoliSynthesis(self.synthesis))
        object.__setattr__(self, "beta_midstate", Fraction(self.beta_midstate).limit_denominator(4))
        _check_register(self.register_bits)
        if self.fixed_point_factor < 1.0:
            raise InvalidInputError("fixed_point_factor must be >= 1")
        hash_work_factor(self.alpha_merkle, self.n_tx, self.beta_midstate)

    @property
    def work_factor(self) -> Fraction:
        return hash_work_factor(self.alpha_merkle, self.n_tx, self.beta_midstate)

    @classmethod
    def p2pkh(cls, **kw) -> OracleSpec:
        kw.setdefault("register_bits", 160)
        return cls(pipeline=HashPipeline(PipelineKind.P2PKH), **kw)


def comparator_tcount(output_bits: int) -> int:
    """T-count of one comparator pass (compute only)."""
    return COMPARATOR_T_PER_CHUNK * comparator_chunks(output_bits)


def diffusion_tcount(n: int) -> int:
    """Multi-controlled Z on ``n`` qubits: ``n - 2`` Toffolis compute + uncompute."""
    return 8 * max(0, n - 2)


def _scale(value: int, factor: float) -> int:
    return value if factor == 1.0 else math.ceil(value * factor)


def oracle_tcount(spec: OracleSpec) -> int:
    """T-count of one Grover iteration (hash compute+uncompute, comparator both ways, diffusion)."""
    hash_t = pipeline_ledger(spec.pipeline, spec.adder_model, spec.synthesis).t_count
    total = int(2 * spec.work_factor * hash_t) + 2 * comparator_tcount(spec.pipeline.output_bits)
    if spec.include_diffusion:
        total += diffusion_tcount(spec.register_bits)
    return _scale(total, spec.fixed_point_factor)


def oracle_tdepth(spec: OracleSpec) -> int:
    """T-depth of one Grover iteration.

    Only the hash compute/uncompute depth is counted unless ``depth_extras``
    is set; that default reproduces the published fleet tables.
    """
    hash_depth = pipeline_ledger(spec.pipeline, spec.adder_model, spec.synthesis).t_depth
    depth = int(2 * spec.work_factor * hash_depth)
    if spec.depth_extras:
        chunk = adder_costs(
            AdderModel.GIDNEY_SCHEDULED if spec.adder_model is not AdderModel.CDKM_BASELINE else AdderModel.CDKM_BASELINE,
            WORD_BITS,
        ).t_depth_layers
        depth += 2 * chunk * comparator_chunks(spec.pipeline.output_bits)
        depth += 2 * max(0, spec.register_bits - 2)
    return _scale(depth, spec.fixed_point_factor)


def grover_iterations(search: SearchSpec) -> LogQuantity:
    """``max(1, round_half_even(pi / (4 theta) - 1/2))``."""
    log10_quarter_turns = math.log10(math.pi / 4.0) - search.log10_theta
    if log10_quarter_turns >= 15.0:
        return LogQuantity.from_log10(log10_quarter_turns)
    x = math.pi / (4.0 * search.theta) - 0.5
    return LogQuantity.from_value(max(1, round(x)))


def capped_iterations(r_ideal: LogQuantity, t_cap_seconds: float, t_iter_seconds: float) -> LogQuantity:
    """``min(r_ideal, floor(t_cap / t_iter))``; zero marks an infeasible cap."""
    if not t_cap_seconds > 0 or not t_iter_seconds > 0:
        raise InvalidInputError("runtime cap and iteration time must be positive")
    fit = LogQuantity.from_value(t_cap_seconds / t_iter_seconds).floor()
    return fit if fit < r_ideal else r_ideal


def _odd_multiplier(r: LogQuantity) -> LogQuantity:
    """``2r + 1`` (exact while r is a representable integer)."""
    if r.log10 < 15.0:
        return LogQuantity.from_value(2 * int(r.value) + 1)
    return r * 2


def single_machine_success(r_cap: LogQuantity, search: SearchSpec) -> LogQuantity | None:
    """``sin^2((2 r_cap + 1) theta)``; ``None`` when ``r_cap`` is zero (infeasible)."""
    if r_cap.is_zero:
        return None
    log10_angle = _odd_multiplier(r_cap).log10 + search.log10_theta
    if log10_angle < math.log10(SMALL_ANGLE):
        y2 = 10.0 ** (2.0 * log10_angle)
        # sin(y)/y = 1 - y^2/6 + y^4/120
        corr = math.log1p(-y2 / 6.0 + y2 * y2 / 120.0) / math.log(10.0)
        return LogQuantity.from_log10(2.0 * log10_angle + 2.0 * corr)
    angle = _odd_multiplier(r_cap).value * search.theta
    return LogQuantity.from_value(math.sin(angle) ** 2)


@dataclass(frozen=True)
class GroverPlan:
    search: SearchSpec
    oracle: OracleSpec
    tau_seconds: float
    t_cap_seconds: float | None
    r_ideal: LogQuantity
    r_cap: LogQuantity
    t_oracle: int
    t_depth_iter: int
    p1: LogQuantity | None

    @property
    def feasible(self) -> bool:
        return not self.r_cap.is_zero

    @property
    def t_iter_seconds(self) -> float:
        return self.t_depth_iter * self.tau_seconds

    @property
    def t_tot(self) -> LogQuantity:
        return self.r_cap * self.t_oracle

    @property
    def t_depth_total(self) -> LogQuantity:
        """Logical program depth in code cycles (one T layer per cycle)."""
        return self.r_cap * self.t_depth_iter

    @property
    def runtime_seconds(self) -> LogQuantity:
        return self.t_depth_total * self.tau_seconds

    def to_dict(self) -> dict:
        return {
            "register_bits": self.search.register_bits,
            "log2_marked": self.search.marked.log2,
            "theta": self.search.theta,
            "pipeline": self.oracle.pipeline.name,
            "adder_model": self.oracle.adder_model.value,
            "synthesis": self.oracle.synthesis.value,
            "work_factor": float(self.oracle.work_factor),
            "r_ideal": self.r_ideal.to_dict(),
            "r_cap": self.r_cap.to_dict(),
            "t_cap_s": self.t_cap_seconds,
            "tau_s": self.tau_seconds,
            "t_iter_s": self.t_iter_seconds,
            "t_oracle": self.t_oracle,
            "t_depth_iter": self.t_depth_iter,
            "t_tot": self.t_tot.to_dict(),
            "p1": None if self.p1 is None else self.p1.to_dict(),
            "feasible": self.feasible,
        }


def plan_grover(
    search: SearchSpec,
    oracle: OracleSpec | None = None,
    tau_seconds: float = 1e-6,
    t_cap_seconds: float | None = None,
) -> GroverPlan:
    """Iteration schedule for one machine; uncapped when ``t_cap_seconds`` is None."""
    oracle = oracle or OracleSpec(register_bits=search.register_bits)
    if oracle.register_bits != search.register_bits:
        raise InvalidInputError("oracle and search register sizes differ")
    if not tau_seconds > 0:
        raise InvalidInputError("cycle time must be positive")
    t_oracle = oracle_tcount(oracle)
    t_depth = oracle_tdepth(oracle)
    r_ideal = grover_iterations(search)
    if t_cap_seconds is None:
        r_cap = r_ideal
    else:
        r_cap = capped_iterations(r_ideal, t_cap_seconds, t_depth * tau_seconds)
    return GroverPlan(
        search=search,
        oracle=oracle,
        tau_seconds=tau_seconds,
        t_cap_seconds=t_cap_seconds,
        r_ideal=r_ideal,
        r_cap=r_cap,
        t_oracle=t_oracle,
        t_depth_iter=t_depth,
        p1=single_machine_success(r_cap, search),
    )

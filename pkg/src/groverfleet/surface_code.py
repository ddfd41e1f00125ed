"""Surface-code lift: code distance, data patches, 15-to-1 factory farm."""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, replace
from pathlib import Path
from enum import Enum

from groverfleet.errors import AboveThresholdError, InvalidInputError
from groverfleet.hash_ledger import pipeline_ledger
from groverfleet.lognum import LogQuantity
from groverfleet.mining_model import GroverPlan, OracleSpec

THRESHOLD = 0.01
PREFACTOR = 0.1
RUN_FAILURE_BUDGET = 0.01
FACTORY_QUBITS_PER_D2 = 1.25
FACTORY_CYCLES_PER_D = 10
MAX_DISTANCE = 9999
# Comparator + diffusion ancillas on top of hash pipeline and search register.
# Only the sum is pinned (1346 = 1153 + 160 + 33); split as one 32-bit
# comparator workspace plus the diffusion's clean ancilla.
COMPARATOR_ANCILLAS = 32
DIFFUSION_ANCILLAS = 1


@dataclass(frozen=True)
class ArchitectureSpec:
    name: str
    tau_s: float
    layout_lambda: float
    p_phys: float
    watts_per_qubit: float
    wall_plug_efficiency: float

    def __post_init__(self) -> None:
        if not self.tau_s > 0:
            raise InvalidInputError(f"{self.name}: cycle time must be positive")
        if not self.layout_lambda > 0:
            raise InvalidInputError(f"{self.name}: layout factor must be positive")
        if not 0 < self.p_phys < THRESHOLD:
            raise AboveThresholdError(f"{self.name}: p_phys={self.p_phys} is not below threshold {THRESHOLD}")
        if not self.watts_per_qubit > 0:
            raise InvalidInputError(f"{self.name}: watts_per_qubit must be positive")
        if not 0 < self.wall_plug_efficiency <= 1:
            raise InvalidInputError(f"{self.name}: efficiency must lie in (0, 1]")

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "tau_s": self.tau_s,
            "lambda": self.layout_lambda,
            "p_phys": self.p_phys,
            "watts_per_qubit": self.watts_per_qubit,
            "efficiency": self.wall_plug_efficiency,
        }


SUPERCONDUCTING = ArchitectureSpec("superconducting", 1e-6, 2.0, 1e-3, 12.0, 0.18)
NEUTRAL_ATOM = ArchitectureSpec("neutral_atom", 2e-6, 2.5, 5e-4, 1e-3, 0.30)
ION_TRAP = ArchitectureSpec("ion_trap", 10e-6, 3.0, 1e-4, 3.0, 0.22)
# Superconducting code parameters at the optimistic 1 mW/qubit full-stack floor.
SUPERCONDUCTING_MW_FLOOR = ArchitectureSpec("superconducting_mw_floor", 1e-6, 2.0, 1e-3, 1e-3, 1.0)

PRESETS: dict[str, ArchitectureSpec] = {
    a.name: a for a in (SUPERCONDUCTING, NEUTRAL_ATOM, ION_TRAP, SUPERCONDUCTING_MW_FLOOR)
}


def get_architecture(name: str) -> ArchitectureSpec:
    try:
        return PRESETS[name]
    except KeyError:
        raise InvalidInputError(f"unknown architecture {name!r}; presets: {sorted(PRESETS)}") from None


_CONFIG_KEYS = {
    "tau_s": "tau_s",
    "lambda": "layout_lambda",
    "p_phys": "p_phys",
    "watts_per_qubit": "watts_per_qubit",
    "efficiency": "wall_plug_efficiency",
}


def architectures_from_ini(text: str, base: dict[str, ArchitectureSpec] | None = None) -> dict[str, ArchitectureSpec]:
    """Override or add presets from INI sections ``[arch.<name>]``.

    A section naming an existing preset only needs the keys it changes.
    """
    out = dict(PRESETS if base is None else base)
    parser = configparser.ConfigParser()
    parser.read_string(text)
    for section in parser.sections():
        if not section.startswith("arch."):
            continue
        name = section[len("arch."):]
        values: dict[str, float] = {}
        for key, raw in parser.items(section):
            if key not in _CONFIG_KEYS:
                raise InvalidInputError(f"{section}.{key}: unknown key; expected one of {sorted(_CONFIG_KEYS)}")
            try:
                values[_CONFIG_KEYS[key]] = float(raw)
            except ValueError:
                raise InvalidInputError(f"{section}.{key}: expected a number, got {raw!r}") from None
        if name in out:
            out[name] = replace(out[name], **values)
        else:
            missing = sorted(k for k, f in _CONFIG_KEYS.items() if f not in values)
            if missing:
                raise InvalidInputError(f"{section}: new architecture is missing {missing}")
            out[name] = ArchitectureSpec(name=name, **values)
    return out


def load_architectures(path: str | Path) -> dict[str, ArchitectureSpec]:
    return architectures_from_ini(Path(path).read_text())


class FailureBudgetMode(str, Enum):
    T_COUNT_PROXY = "t_count"
    VOLUME_PROXY = "volume"


class WidthMode(str, Enum):
    FULL_WIDTH = "full"
    ORACLE_ONLY = "oracle_only"


def _check_distance(d: int) -> None:
    if d < 3 or d % 2 == 0:
        raise InvalidInputError(f"code distance must be odd and >= 3, got {d}")


def log10_logical_error_rate(p_phys: float, d: int) -> float:
    if not 0 < p_phys < THRESHOLD:
        raise AboveThresholdError(f"p_phys={p_phys} is not below threshold {THRESHOLD}")
    _check_distance(d)
    return math.log10(PREFACTOR) + (d + 1) / 2 * math.log10(p_phys / THRESHOLD)


def logical_error_rate(p_phys: float, d: int) -> float:
    """``0.1 * (100 p_phys) ** ((d + 1) / 2)``; underflows to 0.0 for extreme d."""
    return 10.0 ** log10_logical_error_rate(p_phys, d)


def required_distance(
    t_tot: LogQuantity,
    logical_width: int,
    cycles: LogQuantity,
    p_phys: float,
    mode: FailureBudgetMode | str = FailureBudgetMode.T_COUNT_PROXY,
) -> int:
    """Smallest odd ``d >= 3`` whose logical error rate meets ``0.01 / budget``.

    ``budget`` is ``T_tot`` (T-count proxy) or ``width * cycles`` (volume proxy).
    """
    mode = FailureBudgetMode(mode)
    if mode is FailureBudgetMode.T_COUNT_PROXY:
        locations = LogQuantity.from_value(t_tot) if not isinstance(t_tot, LogQuantity) else t_tot
    else:
        locations = LogQuantity.from_value(logical_width) * cycles
    if locations < 1:
        raise InvalidInputError("failure budget needs at least one fault location")
    target = math.log10(RUN_FAILURE_BUDGET) - locations.log10
    for d in range(3, MAX_DISTANCE + 1, 2):
        if log10_logical_error_rate(p_phys, d) <= target:
            return d
    raise InvalidInputError(f"no code distance <= {MAX_DISTANCE} meets p_L <= 10**{target:.2f}")


def factory_count(t_tot: LogQuantity, t_logical_seconds: float | LogQuantity, d: int, tau_s: float) -> int:
    """``ceil((T_tot / t_logical) * 10 d tau)`` factories to meet average demand."""
    t_tot = LogQuantity.from_value(t_tot) if not isinstance(t_tot, LogQuantity) else t_tot
    t_log = t_logical_seconds if isinstance(t_logical_seconds, LogQuantity) else LogQuantity.from_value(t_logical_seconds)
    if t_log.is_zero or tau_s <= 0 or d <= 0:
        raise InvalidInputError("factory sizing needs positive runtime, distance and cycle time")
    demand = t_tot / t_log * (FACTORY_CYCLES_PER_D * d * tau_s)
    return _ceil_int(demand)


def _ceil_int(q: LogQuantity) -> int:
    if q.log10 < 15:
        return math.ceil(q.value)
    # Beyond 1e15 the ceiling is immaterial; carry the magnitude through.
    return int(round(10 ** (q.log10 - 15))) * 10**15


def _exact_factory_count(plan: GroverPlan, d: int) -> int:
    # r_cap cancels: T_tot / T_depth_total == T_oracle / T_depth_iter.
    num = FACTORY_CYCLES_PER_D * d * plan.t_oracle
    return -(-num // plan.t_depth_iter)


def logical_width(oracle: OracleSpec, width_mode: WidthMode | str = WidthMode.FULL_WIDTH) -> int:
    """Logical qubits of one machine: hash core (+ search register and ancillas)."""
    core = pipeline_ledger(oracle.pipeline, oracle.adder_model, oracle.synthesis).logical_width
    if WidthMode(width_mode) is WidthMode.ORACLE_ONLY:
        return core
    return core + oracle.register_bits + COMPARATOR_ANCILLAS + DIFFUSION_ANCILLAS


@dataclass(frozen=True)
class MachineFootprint:
    code_distance: int
    logical_width: int
    data_qubits: LogQuantity
    factory_count: int
    factory_qubits: LogQuantity
    runtime_seconds: LogQuantity
    budget_mode: FailureBudgetMode
    width_mode: WidthMode

    @property
    def total_qubits(self) -> LogQuantity:
        return self.data_qubits + self.factory_qubits

    def to_dict(self) -> dict:
        return {
            "code_distance": self.code_distance,
            "logical_width": self.logical_width,
            "data_qubits": self.data_qubits.to_dict(),
            "factory_count": self.factory_count,
            "factory_qubits": self.factory_qubits.to_dict(),
            "total_qubits": self.total_qubits.to_dict(),
            "runtime_s": self.runtime_seconds.to_dict(),
            "budget_mode": self.budget_mode.value,
            "width_mode": self.width_mode.value,
        }


def machine_footprint(
    plan: GroverPlan,
    arch: ArchitectureSpec,
    mode: FailureBudgetMode | str = FailureBudgetMode.T_COUNT_PROXY,
    width_mode: WidthMode | str = WidthMode.FULL_WIDTH,
) -> MachineFootprint | None:
    """Per-machine footprint; ``None`` for an infeasible (zero-iteration) plan.

    ``plan`` must have been built with ``arch.tau_s``.
    """
    mode, width_mode = FailureBudgetMode(mode), WidthMode(width_mode)
    if not plan.feasible:
        return None
    if plan.tau_seconds != arch.tau_s:
        raise InvalidInputError("plan cycle time does not match the architecture")
    width = logical_width(plan.oracle, width_mode)
    d = required_distance(plan.t_tot, width, plan.t_depth_total, arch.p_phys, mode)
    n_fac = _exact_factory_count(plan, d)
    d2 = d * d
    return MachineFootprint(
        code_distance=d,
        logical_width=width,
        data_qubits=LogQuantity.from_value(arch.layout_lambda * d2 * width),
        factory_count=n_fac,
        factory_qubits=LogQuantity.from_value(FACTORY_QUBITS_PER_D2 * d2 * n_fac),
        runtime_seconds=plan.runtime_seconds,
        budget_mode=mode,
        width_mode=width_mode,
    )

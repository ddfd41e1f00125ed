"""Fleet sizing: independent machines until the joint hit rate reaches a target."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from groverfleet.energy import KardashevClass, fleet_power, kardashev_classify
from groverfleet.errors import InvalidInputError
from groverfleet.lognum import LogQuantity, lq_ratio_of_logs
from groverfleet.mining_model import MAINNET_BITS_2025, GroverPlan, OracleSpec, plan_grover, search_spec
from groverfleet.surface_code import (
    SUPERCONDUCTING,
    ArchitectureSpec,
    FailureBudgetMode,
    MachineFootprint,
    WidthMode,
    get_architecture,
    machine_footprint,
)

# Below this single-machine success, ln(1 - P1) is replaced by -P1.
TINY_P1 = 1e-12


def fleet_size(p1: LogQuantity | float, pt: float) -> LogQuantity:
    """``ceil(ln(1 - Pt) / ln(1 - P1))`` machines."""
    if not 0 < pt < 1:
        raise InvalidInputError(f"target success must lie in (0, 1), got {pt!r}")
    p1 = p1 if isinstance(p1, LogQuantity) else LogQuantity.from_value(p1)
    if p1.is_zero:
        raise InvalidInputError("single-machine success must be positive")
    if p1.log10 >= 0.0:
        return LogQuantity.one()
    ln_miss_target = math.log1p(-pt)
    if p1.log10 < math.log10(TINY_P1):
        # P1 may sit far below float range: divide in log space.
        return LogQuantity.from_log10(math.log10(-ln_miss_target) - p1.log10).ceil()
    return lq_ratio_of_logs(ln_miss_target, math.log1p(-p1.value)).ceil()


@dataclass(frozen=True)
class SweepCell:
    difficulty_bits: float
    t_cap_seconds: float
    target_success: float
    architecture: ArchitectureSpec = SUPERCONDUCTING
    oracle: OracleSpec = field(default_factory=OracleSpec)
    budget_mode: FailureBudgetMode = FailureBudgetMode.T_COUNT_PROXY
    width_mode: WidthMode = WidthMode.FULL_WIDTH
    rung_tag: str | None = None
    # Added to the architecture's per-qubit draw (gate-power floor mode).
    extra_watts_per_qubit: float = 0.0

    def __post_init__(self) -> None:
        if not 0 < self.target_success < 1:
            raise InvalidInputError(f"Pt must lie in (0, 1), got {self.target_success!r}")
        if not self.t_cap_seconds > 0:
            raise InvalidInputError(f"t_cap must be positive, got {self.t_cap_seconds!r}")
        if not math.isfinite(self.difficulty_bits) or self.difficulty_bits < 0:
            raise InvalidInputError(f"difficulty bits must be finite and >= 0, got {self.difficulty_bits!r}")
        object.__setattr__(self, "budget_mode", FailureBudgetMode(self.budget_mode))
        object.__setattr__(self, "width_mode", WidthMode(self.width_mode))

    @property
    def key(self) -> tuple:
        return (self.difficulty_bits, self.t_cap_seconds, self.target_success, self.architecture.name, self.rung_tag or "")


@dataclass(frozen=True)
class FleetReport:
    cell: SweepCell
    plan: GroverPlan
    machine: MachineFootprint | None
    n_machines: LogQuantity | None
    fleet_qubits: LogQuantity | None

    @property
    def feasible(self) -> bool:
        return self.n_machines is not None

    @property
    def fleet_watts(self) -> LogQuantity | None:
        return fleet_power(self.fleet_qubits, self.cell.architecture, self.cell.extra_watts_per_qubit)

    @property
    def kardashev(self) -> KardashevClass | None:
        w = self.fleet_watts
        return None if w is None else kardashev_classify(w)

    def to_dict(self) -> dict:
        c = self.cell
        w = self.fleet_watts
        return {
            "b": c.difficulty_bits,
            "t_cap_s": c.t_cap_seconds,
            "Pt": c.target_success,
            "arch": c.architecture.name,
            "rung_tag": c.rung_tag,
            "budget_mode": c.budget_mode.value,
            "width_mode": c.width_mode.value,
            "feasible": self.feasible,
            "plan": self.plan.to_dict(),
            "machine": None if self.machine is None else self.machine.to_dict(),
            "n_machines": None if self.n_machines is None else self.n_machines.to_dict(),
            "fleet_qubits": None if self.fleet_qubits is None else self.fleet_qubits.to_dict(),
            "fleet_watts": None if w is None else w.to_dict(),
            "kardashev": None if w is None else kardashev_classify(w).to_dict(),
        }


def evaluate_cell(cell: SweepCell) -> FleetReport:
    """b -> M -> theta -> r -> r_cap -> P1 -> d -> footprint -> fleet."""
    arch = cell.architecture
    search = search_spec(cell.oracle.register_bits, cell.difficulty_bits)
    plan = plan_grover(search, cell.oracle, arch.tau_s, cell.t_cap_seconds)
    machine = machine_footprint(plan, arch, cell.budget_mode, cell.width_mode)
    if machine is None or plan.p1 is None:
        return FleetReport(cell, plan, None, None, None)
    n = fleet_size(plan.p1, cell.target_success)
    return FleetReport(cell, plan, machine, n, n * machine.total_qubits)


@dataclass(frozen=True)
class SweepGrid:
    bits: tuple[float, ...]
    t_caps: tuple[float, ...]
    targets: tuple[float, ...]
    architectures: tuple[ArchitectureSpec, ...] = (SUPERCONDUCTING,)

    def __post_init__(self) -> None:
        archs = tuple(get_architecture(a) if isinstance(a, str) else a for a in self.architectures)
        object.__setattr__(self, "architectures", archs)
        for name in ("bits", "t_caps", "targets", "architectures"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
            if not getattr(self, name):
                raise InvalidInputError(f"sweep grid axis {name!r} is empty")

    def cells(self, template: SweepCell | None = None) -> list[SweepCell]:
        """Cartesian cells in (b, t_cap, Pt, architecture) order."""
        base = template or SweepCell(self.bits[0], self.t_caps[0], self.targets[0])
        return [
            replace(base, difficulty_bits=float(b), t_cap_seconds=float(t), target_success=float(pt), architecture=a)
            for b, t, pt, a in itertools.product(self.bits, self.t_caps, self.targets, self.architectures)
        ]


def run_sweep(grid: SweepGrid, template: SweepCell | None = None, workers: int = 1) -> list[FleetReport]:
    """One report per grid cell; ordering is independent of ``workers``."""
    cells = grid.cells(template)
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(evaluate_cell, cells, chunksize=max(1, len(cells) // (4 * workers))))
    return [evaluate_cell(c) for c in cells]


# Representative marked-state regimes at n = 256: (label, log2 |marked|).
SCENARIO_REGIMES = (
    ("true_preimage", 0),
    ("partial_le_2^32", 32),
    ("partial_2^33_2^96", 96),
    ("partial_gt_2^96", 224),
)
SCENARIO_TARGETS = (0.5, 0.99)
SCENARIO_T_CAP_S = 600.0


@dataclass(frozen=True)
class ScenarioRow:
    regime: str
    log2_marked: int
    target_success: float
    report: FleetReport

    def to_dict(self) -> dict:
        r = self.report
        return {
            "regime": self.regime,
            "log2_marked": self.log2_marked,
            "Pt": self.target_success,
            "log10_machines": r.n_machines.log10 if r.feasible else None,
            "log10_fleet_qubits": r.fleet_qubits.log10 if r.feasible else None,
        }


def scenario_scaling(
    t_cap_seconds: float = SCENARIO_T_CAP_S,
    arch: ArchitectureSpec = SUPERCONDUCTING,
    oracle: OracleSpec | None = None,
) -> list[ScenarioRow]:
    oracle = oracle or OracleSpec()
    n = oracle.register_bits
    rows = []
    for label, log2_marked in SCENARIO_REGIMES:
        for pt in SCENARIO_TARGETS:
            cell = SweepCell(float(n - log2_marked), t_cap_seconds, pt, arch, oracle)
            rows.append(ScenarioRow(label, log2_marked, pt, evaluate_cell(cell)))
    return rows


# Default figure grids.
HEATMAP_BITS = tuple(float(b) for b in range(16, 257, 16)) + (MAINNET_BITS_2025,)
HEATMAP_T_CAPS = (0.1, 1.0, 10.0, 60.0, 600.0, 3600.0, 86400.0)
HEATMAP_TARGETS = (0.5, 0.99)
TRADEOFF_T_CAPS = tuple(10.0 ** (k / 4) for k in range(-4, 21))
TRADEOFF_BITS = (32.0, 64.0, MAINNET_BITS_2025, 96.0, 128.0, 160.0, 224.0, 256.0)


def heatmap_grid(architectures=("superconducting", "neutral_atom", "ion_trap")) -> SweepGrid:
    return SweepGrid(tuple(sorted(HEATMAP_BITS)), HEATMAP_T_CAPS, HEATMAP_TARGETS, tuple(architectures))


def tradeoff_grid(architectures=("superconducting", "neutral_atom", "ion_trap")) -> SweepGrid:
    return SweepGrid(TRADEOFF_BITS, TRADEOFF_T_CAPS, HEATMAP_TARGETS, tuple(architectures))


def heatmap_matrix(reports: list[FleetReport], arch: str, target: float, rung_tag: str | None = None):
    """Rows = t_cap (ascending), columns = b (ascending); entries are reports."""
    sel = [
        r for r in reports
        if r.cell.architecture.name == arch and r.cell.target_success == target and r.cell.rung_tag == rung_tag
    ]
    bits = sorted({r.cell.difficulty_bits for r in sel})
    caps = sorted({r.cell.t_cap_seconds for r in sel})
    index = {(r.cell.t_cap_seconds, r.cell.difficulty_bits): r for r in sel}
    return bits, caps, [[index[(t, b)] for b in bits] for t in caps]

"""Energy-scale ladder: the same surface code clocked at tau = kappa * h / E.

Each rung rescales the base architecture's cycle time by the depth multiplier
``S(E) = (E / kappa) / (E_base / kappa_base)``; every other code and power
parameter is inherited, so the microwave rung reproduces the base sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from groverfleet.errors import InvalidInputError
from groverfleet.fleet_planner import FleetReport, SweepCell, SweepGrid, run_sweep
from groverfleet.surface_code import SUPERCONDUCTING, ArchitectureSpec

PLANCK_EV_S = 4.135667696e-15
HBAR_C_EV_M = 1.973269804e-7
EV_J = 1.602176634e-19
PLANCK_J_S = 6.62607015e-34

BASE_ENERGY_EV = 2.067834e-5
BASE_KAPPA = 5.0e3


@dataclass(frozen=True)
class EnergyRung:
    tag: str
    energy_ev: float
    kappa: float

    def __post_init__(self) -> None:
        if not (self.energy_ev > 0 and self.kappa > 0):
            raise InvalidInputError(f"rung {self.tag}: energy and kappa must be positive")

    @property
    def tau0_s(self) -> float:
        return PLANCK_EV_S / self.energy_ev

    @property
    def tau_cycle_s(self) -> float:
        return self.kappa * PLANCK_EV_S / self.energy_ev

    @property
    def length_m(self) -> float:
        return HBAR_C_EV_M / self.energy_ev

    @property
    def speedup(self) -> float:
        return (self.energy_ev / self.kappa) / (BASE_ENERGY_EV / BASE_KAPPA)

    @property
    def log10_speedup(self) -> float:
        return (math.log10(self.energy_ev) - math.log10(self.kappa)) - (math.log10(BASE_ENERGY_EV) - math.log10(BASE_KAPPA))

    @property
    def gate_power_floor_w(self) -> float:
        return gate_power_floor(self.energy_ev, self.kappa)

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "E_eV": self.energy_ev,
            "tau0_s": self.tau0_s,
            "ell_m": self.length_m,
            "kappa": self.kappa,
            "tau_cyc_s": self.tau_cycle_s,
            "S": self.speedup,
            "gate_floor_w": self.gate_power_floor_w,
        }


def rung_derive(energy_ev: float, kappa: float, tag: str = "custom") -> EnergyRung:
    return EnergyRung(tag, energy_ev, kappa)


def gate_power_floor(energy_ev: float, kappa: float) -> float:
    """Minimum dissipation of one gate per cycle, ``E^2 / (kappa h)`` in SI watts."""
    if not (energy_ev > 0 and kappa > 0):
        raise InvalidInputError("energy and kappa must be positive")
    e_j = energy_ev * EV_J
    return e_j * e_j / (kappa * PLANCK_J_S)


LADDER = (
    EnergyRung("surface_mw_5GHz", 2.067834e-5, 5e3),
    EnergyRung("surface_thz_10meV", 1e-2, 1e3),
    EnergyRung("surface_opt_2eV", 2.0, 1e2),
    EnergyRung("surface_xray_10keV", 1e4, 1e1),
    EnergyRung("surface_nuclear_1MeV", 1e6, 5.0),
    EnergyRung("surface_qcd_100MeV", 1e8, 2.0),
    EnergyRung("surface_ew_100GeV", 1e11, 1.0),
    EnergyRung("surface_tev_1TeV", 1e12, 1.0),
    EnergyRung("surface_gut_1e16GeV", 1e19, 1.0),
    EnergyRung("surface_planck", 1.221e28, 1.0),
)
RUNGS = {r.tag: r for r in LADDER}
LOW_TIERS = LADDER[:5]
HIGH_TIERS = LADDER[5:]


def get_rung(tag: str) -> EnergyRung:
    try:
        return RUNGS[tag]
    except KeyError:
        raise InvalidInputError(f"unknown rung {tag!r}; presets: {list(RUNGS)}") from None


def rung_architecture(rung: EnergyRung, base: ArchitectureSpec = SUPERCONDUCTING) -> ArchitectureSpec:
    """Base architecture with its cycle time divided by ``S(E)``."""
    speedup = rung.speedup
    if speedup == 1.0:
        return base
    return replace(base, tau_s=base.tau_s / speedup)


def ladder_sweep(
    rungs,
    grid: SweepGrid,
    template: SweepCell | None = None,
    gate_floor_power: bool = False,
    workers: int = 1,
) -> list[FleetReport]:
    """Rerun the fleet sweep once per rung; each grid architecture is the base.

    With ``gate_floor_power`` the rung's gate-power floor is added to every
    qubit's draw; by default the base wall-plug preset is kept.
    """
    rungs = list(rungs)
    if not rungs:
        raise InvalidInputError("ladder sweep needs at least one rung")
    out: list[FleetReport] = []
    for rung in rungs:
        archs = tuple(rung_architecture(rung, a) for a in grid.architectures)
        sub = replace(grid, architectures=archs)
        base = template or SweepCell(grid.bits[0], grid.t_caps[0], grid.targets[0])
        extra = rung.gate_power_floor_w if gate_floor_power else 0.0
        out.extend(run_sweep(sub, replace(base, rung_tag=rung.tag, extra_watts_per_qubit=extra), workers))
    return out


def per_rung_reductions(reports: list[FleetReport], tags) -> list[tuple[str, str, float]]:
    """Largest per-cell drop in log10 fleet qubits between consecutive rungs.

    Only cells feasible on both rungs are compared.
    """
    by_tag: dict[str, dict[tuple, FleetReport]] = {}
    for r in reports:
        key = (r.cell.difficulty_bits, r.cell.t_cap_seconds, r.cell.target_success, r.cell.architecture.name)
        by_tag.setdefault(r.cell.rung_tag, {})[key] = r
    out = []
    tags = list(tags)
    for lo, hi in zip(tags, tags[1:]):
        worst = -math.inf
        for key, a in by_tag.get(lo, {}).items():
            b = by_tag.get(hi, {}).get(key)
            if a.feasible and b is not None and b.feasible:
                worst = max(worst, a.fleet_qubits.log10 - b.fleet_qubits.log10)
        out.append((lo, hi, worst))
    return out

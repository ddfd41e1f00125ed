"""Fault-tolerant Grover mining resource estimator.

Pipeline: difficulty -> Grover schedule -> reversible hash ledger ->
surface-code footprint -> machine fleet -> wall-plug power.
"""

from groverfleet.fleet_planner import FleetReport, SweepCell, SweepGrid, evaluate_cell, fleet_size, run_sweep
from groverfleet.hash_ledger import GateLedger, double_sha256_ledger, p2pkh_ledger, ripemd160_ledger
from groverfleet.lognum import LogQuantity
from groverfleet.mining_model import GroverPlan, OracleSpec, plan_grover, search_from_difficulty, search_spec
from groverfleet.surface_code import PRESETS, ArchitectureSpec, MachineFootprint, machine_footprint

__all__ = [
    "PRESETS",
    "ArchitectureSpec",
    "FleetReport",
    "GateLedger",
    "GroverPlan",
    "LogQuantity",
    "MachineFootprint",
    "OracleSpec",
    "SweepCell",
    "SweepGrid",
    "double_sha256_ledger",
    "evaluate_cell",
    "fleet_size",
    "machine_footprint",
    "p2pkh_ledger",
    "plan_grover",
    "ripemd160_ledger",
    "run_sweep",
    "search_from_difficulty",
    "search_spec",
]

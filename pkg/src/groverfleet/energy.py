"""Classical mining power, quantum fleet wall-plug power, Kardashev bands."""

from __future__ import annotations

import bisect
import csv
import datetime as dt
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from groverfleet.errors import InvalidInputError
from groverfleet.lognum import LogQuantity
from groverfleet.surface_code import ArchitectureSpec

BLOCK_INTERVAL_S = 600.0
HASHES_PER_DIFFICULTY = 2**32
TERA = 1e12


@dataclass(frozen=True)
class EfficiencyTrack:
    name: str
    joules_per_terahash: float

    def __post_init__(self) -> None:
        if not self.joules_per_terahash > 0:
            raise InvalidInputError(f"track {self.name}: J/TH must be positive")


S9 = EfficiencyTrack("s9", 80.0)
S19 = EfficiencyTrack("s19", 29.5)
S21 = EfficiencyTrack("s21", 17.5)
TRACKS = {t.name: t for t in (S9, S19, S21)}


@dataclass(frozen=True)
class PiecewiseTrack:
    """Fleet-average efficiency as a step function of date (from CSV)."""

    name: str
    dates: tuple[dt.date, ...]
    joules_per_terahash: tuple[float, ...]

    def at(self, when: dt.date) -> EfficiencyTrack:
        i = bisect.bisect_right(self.dates, when) - 1
        if i < 0:
            raise InvalidInputError(f"{when} precedes the first point of track {self.name}")
        return EfficiencyTrack(f"{self.name}@{self.dates[i].isoformat()}", self.joules_per_terahash[i])

    def latest(self) -> EfficiencyTrack:
        return self.at(self.dates[-1])


def load_piecewise_track(path: str | Path, name: str | None = None) -> PiecewiseTrack:
    """Read ``date,j_per_th`` rows; dates must be ISO-8601 and strictly increasing."""
    path = Path(path)
    rows: list[tuple[dt.date, float]] = []
    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["date", "j_per_th"]:
            raise InvalidInputError(f"{path}:1: expected header 'date,j_per_th'")
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            try:
                day = dt.date.fromisoformat(row[0].strip())
                jth = float(row[1])
            except (ValueError, IndexError) as exc:
                raise InvalidInputError(f"{path}:{lineno}: malformed row {row!r} ({exc})") from None
            if not jth > 0:
                raise InvalidInputError(f"{path}:{lineno}: J/TH must be positive")
            if rows and day <= rows[-1][0]:
                raise InvalidInputError(f"{path}:{lineno}: dates must be strictly increasing")
            rows.append((day, jth))
    if not rows:
        raise InvalidInputError(f"{path}: no data rows")
    return PiecewiseTrack(name or path.stem, tuple(r[0] for r in rows), tuple(r[1] for r in rows))


def resolve_track(spec: str) -> EfficiencyTrack:
    """``s9|s19|s21`` or ``file:<csv>`` (latest point of the piecewise track)."""
    if spec.startswith("file:"):
        return load_piecewise_track(spec[len("file:"):]).latest()
    try:
        return TRACKS[spec.lower()]
    except KeyError:
        raise InvalidInputError(f"unknown efficiency track {spec!r}; use s9, s19, s21 or file:<csv>") from None


def network_hashrate(difficulty: float) -> float:
    """Hashes per second that find one block per 600 s on average."""
    if not difficulty > 0 or not math.isfinite(difficulty):
        raise InvalidInputError(f"difficulty must be positive and finite, got {difficulty!r}")
    return difficulty * HASHES_PER_DIFFICULTY / BLOCK_INTERVAL_S


def network_power(difficulty: float, track: EfficiencyTrack) -> float:
    """Classical network draw in watts."""
    return track.joules_per_terahash * network_hashrate(difficulty) / TERA


def fleet_power(fleet_qubits: LogQuantity | None, arch: ArchitectureSpec, extra_watts_per_qubit: float = 0.0) -> LogQuantity | None:
    """Wall-plug watts; ``None`` passes an infeasible fleet through."""
    if fleet_qubits is None:
        return None
    per_qubit = (arch.watts_per_qubit + extra_watts_per_qubit) / arch.wall_plug_efficiency
    return fleet_qubits * per_qubit


class KardashevBand(str, Enum):
    SUB_I = "sub_I"
    I = "I"
    II = "II"
    III = "III"
    BEYOND = "beyond"


# Lower edges (log10 W); a value on an edge belongs to the higher band.
BAND_EDGES_LOG10 = ((16.0, KardashevBand.I), (26.0, KardashevBand.II), (36.0, KardashevBand.III), (46.0, KardashevBand.BEYOND))
# Within this many decades below the next edge, the band is flagged as approaching it.
APPROACH_DECADES = 1.0


@dataclass(frozen=True)
class KardashevClass:
    band: KardashevBand
    index: float
    approaching: KardashevBand | None = None

    def to_dict(self) -> dict:
        return {
            "band": self.band.value,
            "index": self.index,
            "approaching": None if self.approaching is None else self.approaching.value,
            "edges_w": [10.0**e for e, _ in BAND_EDGES_LOG10[:3]],
        }


def kardashev_classify(watts: LogQuantity | float) -> KardashevClass:
    w = watts if isinstance(watts, LogQuantity) else LogQuantity.from_value(watts)
    if w.is_zero:
        return KardashevClass(KardashevBand.SUB_I, -math.inf)
    lg = w.log10
    band = KardashevBand.SUB_I
    approaching = None
    for edge, name in BAND_EDGES_LOG10:
        if lg >= edge:
            band = name
        else:
            if edge - lg <= APPROACH_DECADES:
                approaching = name
            break
    return KardashevClass(band, (lg - 6.0) / 10.0, approaching)


def quantum_classical_ratio(fleet_watts: LogQuantity, classical_watts: float) -> LogQuantity:
    if not classical_watts > 0:
        raise InvalidInputError("classical power must be positive")
    return fleet_watts / classical_watts


@dataclass(frozen=True)
class PowerReport:
    fleet_watts: LogQuantity
    classical_watts: float
    ratio_q_over_c: LogQuantity
    kardashev: KardashevClass

    def to_dict(self) -> dict:
        return {
            "fleet_watts": self.fleet_watts.to_dict(),
            "classical_watts": self.classical_watts,
            "ratio_q_over_c": self.ratio_q_over_c.to_dict(),
            "kardashev": self.kardashev.to_dict(),
        }


def power_report(fleet_watts: LogQuantity, difficulty: float, track: EfficiencyTrack) -> PowerReport:
    classical = network_power(difficulty, track)
    return PowerReport(fleet_watts, classical, quantum_classical_ratio(fleet_watts, classical), kardashev_classify(fleet_watts))


def power_vs_difficulty_series(
    tracks: list[EfficiencyTrack] | None = None,
    log10_d_min: float = 0.0,
    log10_d_max: float = 15.0,
    points_per_decade: int = 4,
) -> list[dict]:
    """Rows ``{track, difficulty, hashrate_hs, power_w}`` on a log-spaced grid."""
    tracks = tracks or [S9, S19, S21]
    steps = int(round((log10_d_max - log10_d_min) * points_per_decade))
    rows = []
    for track in tracks:
        for i in range(steps + 1):
            d = 10.0 ** (log10_d_min + i / points_per_decade)
            rows.append({
                "track": track.name,
                "difficulty": d,
                "hashrate_hs": network_hashrate(d),
                "power_w": network_power(d, track),
            })
    return rows

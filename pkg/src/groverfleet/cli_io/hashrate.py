"""Network hashrate history ingestion (``timestamp,hashrate_ths`` CSV)."""

from __future__ import annotations

import csv
import datetime as dt
import math
import warnings
from dataclasses import dataclass
from pathlib import Path

from groverfleet.errors import InvalidInputError

HEADER = ["timestamp", "hashrate_ths"]


@dataclass(frozen=True, order=True)
class HashrateSample:
    timestamp: dt.date
    hashrate_ths: float


def _parse_date(raw: str) -> dt.date:
    raw = raw.strip()
    try:
        return dt.date.fromisoformat(raw)
    except ValueError:
        pass
    stamp = dt.datetime.fromisoformat(raw.replace("Z", "+00:00"))
    if stamp.tzinfo is not None:
        stamp = stamp.astimezone(dt.timezone.utc)
    return stamp.date()


def ingest_hashrate_csv(path: str | Path) -> list[HashrateSample]:
    """Parse, sort and de-duplicate; later rows win on repeated timestamps."""
    path = Path(path)
    with path.open(newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise InvalidInputError(f"{path}: empty file")
    if [h.strip() for h in rows[0]] != HEADER:
        raise InvalidInputError(f"{path}:1: expected header {','.join(HEADER)}, got {','.join(rows[0])}")
    by_day: dict[dt.date, float] = {}
    order: list[dt.date] = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise InvalidInputError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
        try:
            day = _parse_date(row[0])
            rate = float(row[1])
        except ValueError as exc:
            raise InvalidInputError(f"{path}:{lineno}: malformed row ({exc})") from None
        if not math.isfinite(rate) or rate <= 0:
            raise InvalidInputError(f"{path}:{lineno}: hashrate must be positive, got {row[1].strip()}")
        if day in by_day:
            warnings.warn(f"{path}:{lineno}: duplicate timestamp {day}; keeping the later row", stacklevel=2)
        by_day[day] = rate
        order.append(day)
    if not by_day:
        raise InvalidInputError(f"{path}: no data rows")
    if any(b < a for a, b in zip(order, order[1:])):
        warnings.warn(f"{path}: rows out of order; sorted by timestamp", stacklevel=2)
    return [HashrateSample(d, by_day[d]) for d in sorted(by_day)]


def hashrate_rows(samples: list[HashrateSample]) -> list[dict]:
    return [{"timestamp": s.timestamp.isoformat(), "hashrate_ths": s.hashrate_ths} for s in samples]

"""CSV / JSON / text-table emission for fleet reports and generic row sets."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import IO, Iterable

from groverfleet.errors import InvalidInputError
from groverfleet.fleet_planner import FleetReport

FLEET_COLUMNS = (
    "b",
    "t_cap_s",
    "Pt",
    "arch",
    "rung_tag",
    "feasible",
    "d",
    "log10_machines",
    "log10_fleet_qubits",
    "machine_qubits",
    "runtime_s",
    "fleet_watts_log10",
    "kardashev_band",
)
SIG_DIGITS = 6


def format_number(x) -> str:
    """Six significant digits; integers pass through; ``None`` -> empty."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            return ""
        return f"{x:.{SIG_DIGITS}g}"
    return str(x)


def fleet_row(report: FleetReport) -> dict:
    c = report.cell
    row = {
        "b": c.difficulty_bits,
        "t_cap_s": c.t_cap_seconds,
        "Pt": c.target_success,
        "arch": c.architecture.name,
        "rung_tag": c.rung_tag,
        "feasible": report.feasible,
        "d": None,
        "log10_machines": None,
        "log10_fleet_qubits": None,
        "machine_qubits": None,
        "runtime_s": None,
        "fleet_watts_log10": None,
        "kardashev_band": None,
    }
    if report.feasible:
        watts = report.fleet_watts
        row.update(
            d=report.machine.code_distance,
            log10_machines=report.n_machines.log10,
            log10_fleet_qubits=report.fleet_qubits.log10,
            machine_qubits=report.machine.total_qubits.value,
            runtime_s=report.machine.runtime_seconds.value,
            fleet_watts_log10=watts.log10,
            kardashev_band=report.kardashev.band.value,
        )
    return row


def _columns_for(reports: list[FleetReport]) -> tuple[str, ...]:
    if any(r.cell.rung_tag for r in reports):
        return FLEET_COLUMNS
    return tuple(c for c in FLEET_COLUMNS if c != "rung_tag")


def rows_to_csv(rows: Iterable[dict], columns: Iterable[str]) -> str:
    columns = list(columns)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(row.get(c)) for c in columns])
    return buf.getvalue()


def _parse_field(s: str):
    if s == "":
        return None
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def parse_csv(text: str) -> tuple[list[str], list[dict]]:
    """Read an emitted CSV back as (columns, typed rows)."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        raise InvalidInputError("empty CSV")
    return header, [{k: _parse_field(v) for k, v in zip(header, r)} for r in reader]


def rows_to_table(rows: list[dict], columns: Iterable[str]) -> str:
    columns = list(columns)
    cells = [[format_number(r.get(c)) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.rjust(w) for v, w in zip(row, widths)) for row in cells)
    return "\n".join(lines) + "\n"


def _json_default(obj):
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"not serializable: {type(obj).__name__}")


def _clean(obj):
    # JSON has no inf/nan; map them to null.
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def to_json(payload) -> str:
    return json.dumps(_clean(json.loads(json.dumps(payload, default=_json_default))), indent=2, sort_keys=True) + "\n"


def render_rows(rows: list[dict], fmt: str, columns: Iterable[str] | None = None) -> str:
    if not rows:
        raise InvalidInputError("nothing to emit")
    columns = list(columns or rows[0].keys())
    if fmt == "csv":
        return rows_to_csv(rows, columns)
    if fmt == "json":
        return to_json(rows)
    if fmt == "table":
        return rows_to_table(rows, columns)
    raise InvalidInputError(f"unknown format {fmt!r}")


def render_fleet(reports: list[FleetReport], fmt: str) -> str:
    if not reports:
        raise InvalidInputError("nothing to emit")
    if fmt == "json":
        return to_json([r.to_dict() for r in reports])
    return render_rows([fleet_row(r) for r in reports], fmt, _columns_for(reports))


def write_text(text: str, destination: str | Path | IO[str] | None) -> None:
    """Write to a path, an open stream, or stdout (``None`` or ``-``)."""
    if destination is None or destination == "-":
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        path = Path(destination)
        if path.parent and not path.parent.exists():
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, newline="")


def emit_report(reports: list[FleetReport], fmt: str = "csv", destination=None) -> None:
    write_text(render_fleet(list(reports), fmt), destination)

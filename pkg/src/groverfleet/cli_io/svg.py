"""Minimal standalone SVG heatmap (no plotting dependency)."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape

from groverfleet.errors import InvalidInputError
from groverfleet.mining_model import MAINNET_BITS_2025

CELL_W, CELL_H = 48, 28
MARGIN_L, MARGIN_T, MARGIN_B = 80, 30, 50
INFEASIBLE_FILL = "#9e9e9e"
# Anchor colours of a perceptually ordered ramp (dark blue -> yellow).
_RAMP = ((68, 1, 84), (59, 82, 139), (33, 145, 140), (94, 201, 98), (253, 231, 37))


@dataclass(frozen=True)
class HeatCell:
    log10_value: float | None
    distance: int | None = None

    @property
    def feasible(self) -> bool:
        return self.log10_value is not None


def _colour(t: float) -> str:
    t = min(1.0, max(0.0, t))
    pos = t * (len(_RAMP) - 1)
    i = min(int(pos), len(_RAMP) - 2)
    f = pos - i
    rgb = [round(a + (b - a) * f) for a, b in zip(_RAMP[i], _RAMP[i + 1])]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _marker_x(x_values: list[float], marker: float) -> float | None:
    """Pixel x of ``marker`` interpolated between column centres."""
    if len(x_values) == 1:
        return MARGIN_L + CELL_W / 2 if x_values[0] == marker else None
    if not (min(x_values) <= marker <= max(x_values)):
        return None
    pairs = sorted((v, i) for i, v in enumerate(x_values))
    for (v0, i0), (v1, i1) in zip(pairs, pairs[1:]):
        if v0 <= marker <= v1:
            f = 0.0 if v1 == v0 else (marker - v0) / (v1 - v0)
            c0 = MARGIN_L + (i0 + 0.5) * CELL_W
            c1 = MARGIN_L + (i1 + 0.5) * CELL_W
            return c0 + f * (c1 - c0)
    return None


def render_svg_heatmap(
    matrix: list[list[HeatCell]],
    x_values: list[float],
    y_labels: list[str],
    title: str = "",
    x_label: str = "difficulty bits b",
    marker: float | None = MAINNET_BITS_2025,
) -> str:
    if not matrix or not matrix[0]:
        raise InvalidInputError("heatmap matrix is empty")
    cols = len(matrix[0])
    if any(len(row) != cols for row in matrix):
        raise InvalidInputError("heatmap matrix is ragged")
    if len(x_values) != cols or len(y_labels) != len(matrix):
        raise InvalidInputError("axis labels do not match the matrix shape")
    vals = [c.log10_value for row in matrix for c in row if c.feasible]
    lo, hi = (min(vals), max(vals)) if vals else (0.0, 1.0)
    span = hi - lo or 1.0
    width = MARGIN_L + cols * CELL_W + 20
    height = MARGIN_T + len(matrix) * CELL_H + MARGIN_B
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" font-family="sans-serif" font-size="10">',
        f'<text x="{MARGIN_L}" y="18" font-size="12">{escape(title)}</text>',
    ]
    for r, row in enumerate(matrix):
        y = MARGIN_T + r * CELL_H
        out.append(f'<text x="{MARGIN_L - 6}" y="{y + CELL_H / 2 + 4}" text-anchor="end">{escape(y_labels[r])}</text>')
        for c, cell in enumerate(row):
            x = MARGIN_L + c * CELL_W
            if cell.feasible:
                fill = _colour((cell.log10_value - lo) / span)
                tip = f"log10={cell.log10_value:.2f}"
            else:
                fill, tip = INFEASIBLE_FILL, "infeasible"
            out.append(f'<rect x="{x}" y="{y}" width="{CELL_W}" height="{CELL_H}" fill="{fill}"><title>{tip}</title></rect>')
            if cell.distance is not None:
                out.append(f'<text x="{x + CELL_W / 2}" y="{y + CELL_H / 2 + 4}" text-anchor="middle" fill="white">d={cell.distance}</text>')
    base = MARGIN_T + len(matrix) * CELL_H
    for c, v in enumerate(x_values):
        out.append(f'<text x="{MARGIN_L + (c + 0.5) * CELL_W}" y="{base + 14}" text-anchor="middle">{v:g}</text>')
    out.append(f'<text x="{MARGIN_L + cols * CELL_W / 2}" y="{base + 34}" text-anchor="middle">{escape(x_label)}</text>')
    if marker is not None:
        mx = _marker_x(list(x_values), marker)
        if mx is not None:
            out.append(
                f'<line class="mainnet-marker" x1="{mx:.2f}" y1="{MARGIN_T}" x2="{mx:.2f}" y2="{base}" '
                'stroke="white" stroke-width="2" stroke-dasharray="6,4"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg_heatmap(matrix, x_values, y_labels, path: str | Path, **kw) -> None:
    Path(path).write_text(render_svg_heatmap(matrix, x_values, y_labels, **kw))

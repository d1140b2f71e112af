"""Tiny standalone SVG line plots, no rendering dependencies."""

from __future__ import annotations

from pathlib import Path

import numpy as np

__all__ = ["write_line_plot"]

_W, _H = 640, 420
_MARGIN = 50
_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


def _scale(v, lo, hi, out_lo, out_hi):
    if hi == lo:
        hi = lo + 1.0
    return out_lo + (np.asarray(v) - lo) * (out_hi - out_lo) / (hi - lo)


def write_line_plot(path, title: str, x, ys: dict) -> None:
    """Write a minimal SVG with one polyline per labeled y-array."""
    x = np.asarray(x, dtype=float)
    xlo, xhi = float(np.min(x)), float(np.max(x))
    all_y = np.concatenate([np.asarray(y, dtype=float) for y in ys.values()])
    ylo, yhi = float(np.min(all_y)), float(np.max(all_y))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{_MARGIN}" y1="{_H - _MARGIN}" x2="{_W - _MARGIN}" '
        f'y2="{_H - _MARGIN}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" '
        f'y2="{_H - _MARGIN}" stroke="black"/>',
        f'<text x="{_MARGIN}" y="{_H - _MARGIN + 16}" font-size="10">{xlo:.4g}</text>',
        f'<text x="{_W - _MARGIN}" y="{_H - _MARGIN + 16}" text-anchor="end" '
        f'font-size="10">{xhi:.4g}</text>',
        f'<text x="{_MARGIN - 4}" y="{_H - _MARGIN}" text-anchor="end" '
        f'font-size="10">{ylo:.4g}</text>',
        f'<text x="{_MARGIN - 4}" y="{_MARGIN + 4}" text-anchor="end" '
        f'font-size="10">{yhi:.4g}</text>',
    ]
    px = _scale(x, xlo, xhi, _MARGIN, _W - _MARGIN)
    for i, (label, y) in enumerate(ys.items()):
        py = _scale(np.asarray(y, dtype=float), ylo, yhi, _H - _MARGIN, _MARGIN)
        pts = " ".join(f"{a:.2f},{b:.2f}" for a, b in zip(px, py))
        color = _COLORS[i % len(_COLORS)]
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(
            f'<text x="{_W - _MARGIN}" y="{_MARGIN + 14 * i}" text-anchor="end" '
            f'font-size="11" fill="{color}">{label}</text>'
        )
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n", encoding="utf-8")

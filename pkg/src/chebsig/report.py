"""Experiment reports and their CSV/JSON serialization.

CSV files are UTF-8, comma separated, one header row, with every float
printed to 17 significant digits so values survive a parse round trip and
reruns with the same seed produce byte-identical files.  Wall-clock scalars
belong in the JSON report, never in CSV, to keep that guarantee.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

__all__ = ["Series", "ExperimentReport", "format_float", "write_report"]


def format_float(x: float) -> str:
    return f"{x:.17g}"


@dataclass
class Series:
    """A labeled table of equally long float columns."""

    label: str
    columns: dict[str, np.ndarray]

    def __post_init__(self):
        if not self.columns:
            raise ValueError("series needs at least one column")
        lengths = {len(v) for v in self.columns.values()}
        if len(lengths) != 1:
            raise ValueError(f"series {self.label!r} has ragged columns")

    def __len__(self) -> int:
        return len(next(iter(self.columns.values())))


@dataclass
class ExperimentReport:
    """Named scalar results plus labeled column tables for one experiment."""

    name: str
    scalars: dict[str, float] = field(default_factory=dict)
    series: list[Series] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def add_scalar(self, label: str, value: float) -> None:
        if label in self.scalars:
            raise ValueError(f"duplicate scalar label {label!r}")
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"scalar {label!r} is not finite")
        self.scalars[label] = value

    def add_series(self, label: str, columns: dict) -> None:
        if any(s.label == label for s in self.series):
            raise ValueError(f"duplicate series label {label!r}")
        cols = {k: np.asarray(v, dtype=float) for k, v in columns.items()}
        for key, arr in cols.items():
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"series {label!r} column {key!r} has non-finite values")
        self.series.append(Series(label, cols))

    def get_series(self, label: str) -> Series:
        for s in self.series:
            if s.label == label:
                return s
        raise KeyError(label)


def _write_series_csv(path: Path, series: Series) -> None:
    names = list(series.columns)
    cols = [series.columns[n] for n in names]
    lines = [",".join(names)]
    for row in zip(*cols):
        lines.append(",".join(format_float(v) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_report(report: ExperimentReport, out_dir) -> Path:
    """Write <out_dir>/<name>/<series>.csv files plus report.json.

    Returns the experiment directory.  I/O failures propagate as OSError
    with the offending path in the message.
    """
    exp_dir = Path(out_dir) / report.name
    try:
        exp_dir.mkdir(parents=True, exist_ok=True)
        series_files = []
        for s in report.series:
            fname = f"{s.label}.csv"
            _write_series_csv(exp_dir / fname, s)
            series_files.append(fname)
        payload = {
            "name": report.name,
            "scalars": report.scalars,
            "metadata": report.metadata,
            "series_files": series_files,
        }
        (exp_dir / "report.json").write_text(
            json.dumps(payload, indent=2) + "\n", encoding="utf-8"
        )
    except OSError as exc:
        raise OSError(f"failed writing report under {exp_dir}: {exc}") from exc
    return exp_dir

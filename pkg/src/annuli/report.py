"""CSV / JSON rendering of spectrum and noncompactness tables."""

from __future__ import annotations

import csv
import io
import json
import platform
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from .errors import ArtifactIOError, InvalidArgumentError
from .profile import DEFAULT_ODE_TOL
from .spectrum import DEFAULT_ROOT_TOL, ModeSolution
from .surface import ReportRow, report_row

__all__ = ["COLUMNS", "write_report", "rows_to_csv", "rows_to_json", "read_csv_rows"]

COLUMNS = ("n", "c_n", "r_min", "period", "sup_A", "area", "H_residual", "fb_residual")


def _as_rows(rows) -> list[ReportRow]:
    out = []
    for row in rows:
        if isinstance(row, ModeSolution):
            row = report_row(row, samples_per_period=1000)
        if not isinstance(row, ReportRow):
            raise InvalidArgumentError(f"cannot report a {type(row).__name__}")
        out.append(row)
    if not out:
        raise InvalidArgumentError("report needs at least one row")
    return out


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in _as_rows(rows):
        writer.writerow([_fmt(getattr(row, col)) for col in COLUMNS])
    return buf.getvalue()


def _metadata(extra=None) -> dict:
    meta = {
        "columns": list(COLUMNS),
        "tolerances": {
            "ode_tol": DEFAULT_ODE_TOL,
            "root_tol": DEFAULT_ROOT_TOL,
            "H_residual": 1e-7,
            "fb_residual": 1e-12,
        },
        "versions": {
            "annuli": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "python": platform.python_version(),
        },
        "indexing": "n counts profile oscillations per revolution of S^1; "
                    "sequence_index = n - 1 orders the annuli by decreasing r(0) = r_min",
    }
    if extra:
        meta.update(extra)
    return meta


def rows_to_json(rows, metadata=None) -> str:
    records = []
    for row in _as_rows(rows):
        rec = {col: getattr(row, col) for col in COLUMNS}
        rec["sequence_index"] = row.sequence_index
        records.append(rec)
    doc = {"metadata": _metadata(metadata), "rows": records}
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def write_report(rows, path, format: str | None = None, metadata=None) -> None:
    """Write rows to ``path`` as CSV or JSON (format defaults to the file suffix)."""
    path = Path(path)
    fmt = (format or path.suffix.lstrip(".") or "csv").lower()
    if fmt == "csv":
        text = rows_to_csv(rows)
    elif fmt == "json":
        text = rows_to_json(rows, metadata)
    else:
        raise InvalidArgumentError(f"report format must be csv or json, got {fmt!r}")
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ArtifactIOError(f"cannot write report to {path}: {exc}") from exc


def read_csv_rows(path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return [{k: (int(v) if k == "n" else float(v)) for k, v in rec.items()}
                for rec in csv.DictReader(fh)]

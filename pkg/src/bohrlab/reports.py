"""Serialisation of flat report rows to CSV, JSON and markdown."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import List, Optional, Sequence

FORMATS = ("csv", "json", "md")


def format_number(x, precision: Optional[int] = 6) -> str:
    """``precision`` significant digits, or ``repr`` when precision is None."""
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        return str(x)
    if isinstance(x, int):
        return str(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r} in report")
    if precision is None:
        return repr(float(x))
    return f"{x:.{precision}g}"


def _columns(rows: Sequence[dict]) -> List[str]:
    cols: List[str] = []
    for row in rows:
        for key in row:
            if key not in cols:
                cols.append(key)
    return cols


def to_csv(rows: Sequence[dict], precision: Optional[int] = 6) -> str:
    cols = _columns(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([format_number(row.get(c, ""), precision) for c in cols])
    return buf.getvalue()


def _json_value(x, precision):
    if isinstance(x, float):
        return float(format_number(x, precision))
    return x


def to_json(rows: Sequence[dict], precision: Optional[int] = 6) -> str:
    """Minified JSON array of objects; floats rounded as in the other formats."""
    data = [{k: _json_value(v, precision) for k, v in row.items()} for row in rows]
    return json.dumps(data, separators=(",", ":"))


def to_markdown(rows: Sequence[dict], precision: Optional[int] = 6) -> str:
    cols = _columns(rows)
    cells = [[format_number(row.get(c, ""), precision) for c in cols] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(cols)]
    lines = [
        "| " + " | ".join(c.ljust(w) for c, w in zip(cols, widths)) + " |",
        "|" + "|".join("-" * (w + 2) for w in widths) + "|",
    ]
    for r in cells:
        lines.append("| " + " | ".join(v.rjust(w) for v, w in zip(r, widths)) + " |")
    return "\n".join(lines) + "\n"


def render(rows: Sequence[dict], fmt: str, precision: Optional[int] = 6) -> str:
    if fmt == "csv":
        return to_csv(rows, precision)
    if fmt == "json":
        return to_json(rows, precision) + "\n"
    if fmt == "md":
        return to_markdown(rows, precision)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")

"""Byte-stable renderings of a cascade table."""

from __future__ import annotations

import csv
import io
import json

from .bounds import CascadeTable

FORMATS = ("md", "csv", "json")
CSV_HEADER = ("n", "a_min", "nu", "v_inf", "v_fin")


def _cells(row):
    vf = "" if row.v_fin_min is None else str(row.v_fin_min)
    return (str(row.n), str(row.a_min), str(row.nu), str(row.v_inf_min), vf)


def to_csv(table: CascadeTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in table.rows:
        w.writerow(_cells(row))
    return buf.getvalue()


def to_markdown(table: CascadeTable) -> str:
    head = ["Dimension n", "a_{n-1}(P^n) >=", "nu_n >=", "v_inf(P^n) >=", "v_fin(P^n) >="]
    lines = ["| " + " | ".join(head) + " |", "|" + "|".join("---:" for _ in head) + "|"]
    for row in table.rows:
        cells = list(_cells(row))
        cells[4] = cells[4] or "-"
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def to_json(table: CascadeTable) -> str:
    cfg = table.config
    doc = {
        "config": {
            "max_dim": cfg.max_dim,
            "nu_bases": {str(k): str(v) for k, v in sorted(cfg.nu_bases.items())},
            "nu_update_rule": cfg.nu_update_rule,
            "v5_base": str(cfg.v5_base),
            "vfin7_base": str(cfg.vfin7_base),
        },
        "rows": [
            {
                "n": row.n,
                "a_min": str(row.a_min),
                "nu": str(row.nu),
                "v_inf": str(row.v_inf_min),
                "v_fin": None if row.v_fin_min is None else str(row.v_fin_min),
            }
            for row in table.rows
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def render(table: CascadeTable, fmt: str) -> str:
    if fmt == "md":
        return to_markdown(table)
    if fmt == "csv":
        return to_csv(table)
    if fmt == "json":
        return to_json(table)
    raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")


def rows_from_json(text: str) -> list[dict]:
    """Parse rows back with exact integers (for round-trip checks)."""
    doc = json.loads(text)
    out = []
    for r in doc["rows"]:
        out.append({k: (v if k == "n" or v is None else int(v)) for k, v in r.items()})
    return out

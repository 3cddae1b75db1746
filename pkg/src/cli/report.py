"""Report rendering for sweeps: JSON, CSV and plain text.

Output depends only on the config and the verdicts, never on the clock or
on worker scheduling, so identical configs give byte-identical reports.
"""

from __future__ import annotations

import io
import json
from typing import Dict, List, Mapping, Sequence, Tuple

import pandas as pd

from src import __version__
from src.theorems.sweep import SweepReport
from src.theorems.verdict import PARAM_ORDER, TheoremVerdict

TOOL_NAME = "quadclass"

COLUMNS = (
    "theorem",
    "params",
    "status",
    "case",
    "m",
    "a",
    "d",
    "expected_divisor",
    "h",
    "order_s",
    "predicted_orders",
    "full_divisibility",
    "pass",
    "notes",
)


def build_document(config: Mapping[str, object], report: SweepReport) -> Dict[str, object]:
    return {
        "meta": {"tool": TOOL_NAME, "version": __version__},
        "config": dict(config),
        "verdicts": [v.to_dict() for v in report.verdicts],
        "summary": report.summary(),
    }


def render_json(config: Mapping[str, object], report: SweepReport) -> str:
    return json.dumps(build_document(config, report), indent=2, sort_keys=True) + "\n"


def parse_json(text: str) -> Tuple[Dict[str, object], List[TheoremVerdict]]:
    """The document and its verdicts rebuilt as TheoremVerdict values."""
    doc = json.loads(text)
    return doc, [TheoremVerdict.from_dict(v) for v in doc["verdicts"]]


def verdicts_to_frame(verdicts: Sequence[TheoremVerdict]) -> pd.DataFrame:
    """One row per verdict. Parameter columns come first, then COLUMNS."""
    rows = []
    param_names: List[str] = []
    for v in verdicts:
        for name in PARAM_ORDER[v.theorem_id]:
            if name not in param_names:
                param_names.append(name)
        row = v.to_dict()
        flat = {name: value for name, value in v.params}
        flat.update(
            {
                "theorem": row["theorem"],
                "params": ", ".join(f"{k}={val}" for k, val in v.params),
                "status": row["status"],
                "case": row["case"],
                "m": row["m"],
                "a": row["a"],
                "d": row["d"],
                "expected_divisor": row["expected_divisor"],
                "h": row["h"],
                "order_s": row["order_s"],
                "predicted_orders": " ".join(row["predicted_orders"]),
                "full_divisibility": row["full_divisibility"],
                "pass": row["pass"],
                "notes": row["notes"],
            }
        )
        rows.append(flat)
    return pd.DataFrame(rows, columns=[*param_names, *COLUMNS])


def render_csv(report: SweepReport) -> str:
    frame = verdicts_to_frame(report.verdicts).drop(columns=["params"])
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def format_verdict(v: TheoremVerdict) -> str:
    params = ", ".join(f"{k}={val}" for k, val in v.params)
    parts = [f"{v.theorem_id.value} {params}", v.status.value]
    if v.case_label:
        parts.append(f"case {v.case_label}")
    if v.decomposition is not None:
        parts.append(f"d={v.d} a={v.decomposition.a}")
    if v.h is not None:
        parts.append(f"h={v.h}")
    if v.expected_divisor is not None:
        parts.append(f"expects {v.expected_divisor} | h")
    if v.order_s is not None:
        parts.append(f"order {v.order_s}")
    if v.full_divisibility is not None:
        parts.append("n | h" if v.full_divisibility else "n does not divide h")
    if v.notes:
        parts.append(f"({v.notes})")
    return "  ".join(parts)


def summary_line(report: SweepReport) -> str:
    counts = report.counts
    body = ", ".join(f"{name} {counts[name]}" for name in counts if counts[name])
    broken = [inv.name for inv in report.invariants if not inv.holds]
    tail = f"; invariants violated: {', '.join(broken)}" if broken else ""
    return f"{report.theorem_id.value}: {len(report.verdicts)} points ({body or 'none'}){tail}"


def render_text(report: SweepReport) -> str:
    lines = [format_verdict(v) for v in report.verdicts]
    for inv in report.invariants:
        state = "holds" if inv.holds else "VIOLATED"
        lines.append(f"invariant {inv.name}: {state} ({inv.checked} checked)")
        lines.extend(f"  {item}" for item in inv.violations)
    lines.append(summary_line(report))
    return "\n".join(lines) + "\n"


def render(fmt: str, config: Mapping[str, object], report: SweepReport) -> str:
    if fmt == "json":
        return render_json(config, report)
    if fmt == "csv":
        return render_csv(report)
    return render_text(report)

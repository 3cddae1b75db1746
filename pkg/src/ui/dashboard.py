"""Summary metrics for the last sweep."""

from __future__ import annotations

import streamlit as st

from src.theorems.sweep import SweepReport


def render_dashboard(report: SweepReport) -> None:
    """Render the top metric bar with verdict counts and invariant state."""

    st.markdown("### Sweep Summary")

    counts = report.counts
    c1, c2, c3, c4, c5 = st.columns(5)

    with c1:
        st.metric("Points", len(report.verdicts))

    with c2:
        st.metric("Pass", counts["pass"])

    with c3:
        failed = counts["fail"] + counts["error"]
        st.metric(
            "Fail / error",
            failed,
            delta="clean" if failed == 0 else f"-{failed}",
            delta_color="normal" if failed == 0 else "inverse",
        )

    with c4:
        st.metric(
            "Vacuous",
            counts["not-applicable"] + counts["excluded"],
            help="not applicable or excluded by hypothesis",
        )

    with c5:
        st.metric("Skipped (budget)", counts["skipped"])

    for inv in report.invariants:
        if inv.holds:
            st.caption(f"invariant {inv.name}: holds over {inv.checked} checks")
        else:
            st.error(f"invariant {inv.name} violated: " + "; ".join(inv.violations[:5]))

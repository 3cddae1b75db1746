"""Log of notable points: failures, exceptions, skipped and vacuous points."""

from __future__ import annotations

from typing import List

import streamlit as st

from src.cli.report import format_verdict
from src.theorems.verdict import Status, TheoremVerdict


def _notable(v: TheoremVerdict) -> bool:
    if v.status is not Status.PASS:
        return True
    return v.full_divisibility is False


def render_event_log(verdicts: List[TheoremVerdict], max_display: int = 40) -> None:
    """Render notable verdicts, most severe first."""

    st.markdown("### Point Log")

    notable = [v for v in verdicts if _notable(v)]
    if not notable:
        st.caption("Every evaluated point passed with full divisibility.")
        return

    rank = {Status.ERROR: 0, Status.FAIL: 1, Status.PASS: 2, Status.SKIPPED: 3}
    notable.sort(key=lambda v: rank.get(v.status, 4))

    for v in notable[:max_display]:
        line = format_verdict(v)
        if v.status in (Status.FAIL, Status.ERROR):
            st.markdown(f":red[**{v.status.value.upper()}**] `{line}`")
        elif v.status is Status.PASS:
            st.markdown(f":orange[**n/2 only**] `{line}`")
        elif v.status is Status.SKIPPED:
            st.markdown(f":gray[**SKIP**] `{line}`")
        else:
            st.markdown(f"`{line}`")
    if len(notable) > max_display:
        st.caption(f"{len(notable) - max_display} more not shown")

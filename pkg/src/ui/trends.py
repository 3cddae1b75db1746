"""Charts of h(d) and class orders across the sweep grid."""

from __future__ import annotations

import numpy as np
import pandas as pd
import streamlit as st


def _numeric(frame: pd.DataFrame, column: str) -> pd.Series:
    return pd.to_numeric(frame[column], errors="coerce")


def render_trends(frame: pd.DataFrame) -> None:
    """Render h(d) and h/expected ratios for the evaluated points."""

    evaluated = frame[frame["h"].notna()].copy()
    if len(evaluated) < 2:
        st.info("Charts appear once two or more points have a class number.")
        return

    evaluated["h"] = _numeric(evaluated, "h")
    evaluated["expected_divisor"] = _numeric(evaluated, "expected_divisor")
    evaluated = evaluated.set_index("params")

    st.markdown("### Class Numbers")

    c1, c2 = st.columns(2)

    with c1:
        st.markdown("**log10 h(d)**")
        st.bar_chart(np.log10(evaluated[["h"]].astype(float)), height=220)

    with c2:
        st.markdown("**h(d) / expected divisor**")
        ratio = (evaluated["h"] / evaluated["expected_divisor"]).rename("quotient")
        st.line_chart(ratio, height=220)

    ordered = evaluated[evaluated["order_s"].notna()]
    if not ordered.empty:
        st.markdown("**Order of the class above the base prime**")
        st.line_chart(_numeric(ordered, "order_s").rename("order_s"), height=180)

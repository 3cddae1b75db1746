"""Sidebar: theorem choice, parameter ranges and budgets."""

from __future__ import annotations

from typing import Dict

import streamlit as st

from src.cli.config import FILTERS, ParamRange, SweepConfig
from src.core.constants import BUDGETS
from src.theorems.verdict import PARAM_ORDER, TheoremId

THEOREM_LABELS = {
    TheoremId.T2: "Thm 2: n odd, n | h(1 - 4k^n)",
    TheoremId.T3: "Thm 3: n/2 or n | h via a = a1 a2",
    TheoremId.T4: "Thm 4: k with a prime = 3 (mod 4), n even",
    TheoremId.T5: "Thm 5: k odd, at most one exceptional n",
    TheoremId.T6: "Thm 6: Q(sqrt(3^(2e) - 4q^n))",
    TheoremId.T41: "Thm 4.1: k^n < (1 - d)^2 / 16",
    TheoremId.T42: "Thm 4.2: k = 2 l^e",
}

# Starting ranges shown for each theorem
DEFAULT_RANGES: Dict[TheoremId, Dict[str, str]] = {
    TheoremId.T2: {"k": "2..30", "n": "3..7"},
    TheoremId.T3: {"k": "2..30", "n": "1..6"},
    TheoremId.T4: {"k": "3..41", "n": "2..6"},
    TheoremId.T5: {"k": "3..49", "n": "2..8"},
    TheoremId.T6: {"q": "2..31", "n": "1..8", "e": ""},
    TheoremId.T41: {"x": "1,3,5", "k": "2..12", "n": "3..6"},
    TheoremId.T42: {"l": "3,5,7", "e": "0..2", "n": "1..6"},
}

DEFAULT_FILTERS: Dict[TheoremId, Dict[str, str]] = {
    TheoremId.T2: {"n": "odd"},
    TheoremId.T4: {"k": "odd", "n": "even"},
    TheoremId.T5: {"k": "odd"},
    TheoremId.T6: {"q": "prime"},
}


def render_sidebar() -> SweepConfig:
    """Render the sidebar and return the sweep it describes."""

    st.sidebar.header("Theorem")
    theorem_id = st.sidebar.selectbox(
        "Statement",
        list(THEOREM_LABELS),
        format_func=THEOREM_LABELS.get,
        index=3,
    )

    st.sidebar.divider()
    st.sidebar.header("Parameters")
    st.sidebar.caption("lo..hi, lo..hi/step or a comma list")

    ranges: Dict[str, ParamRange] = {}
    for name in PARAM_ORDER[theorem_id]:
        c1, c2 = st.sidebar.columns([3, 2])
        text = c1.text_input(
            name, DEFAULT_RANGES[theorem_id][name], key=f"{theorem_id.value}-{name}"
        )
        keep = c2.selectbox(
            "filter",
            FILTERS,
            index=FILTERS.index(DEFAULT_FILTERS.get(theorem_id, {}).get(name, "range")),
            key=f"{theorem_id.value}-{name}-filter",
        )
        if text.strip():
            ranges[name] = ParamRange.parse(text, keep)
        elif not (theorem_id is TheoremId.T6 and name == "e"):
            st.sidebar.warning(f"{name} needs a range")
    if theorem_id is TheoremId.T6 and "e" not in ranges:
        st.sidebar.caption("e empty: every e with 3^(2e) < 4q^n")

    st.sidebar.divider()
    st.sidebar.header("Budgets")
    factor_exp = st.sidebar.slider("factorization cap (10^x)", 6, 16, 12)
    disc_exp = st.sidebar.slider("discriminant cap (10^x)", 4, 9, 8)
    workers = st.sidebar.number_input("workers", 1, 16, 1)

    if st.sidebar.button("Clear results", type="secondary", use_container_width=True):
        for key in list(st.session_state.keys()):
            del st.session_state[key]
        st.rerun()

    return SweepConfig(
        theorem_id=theorem_id,
        ranges=ranges,
        budgets=BUDGETS.replace(factor_cap=10**factor_exp, disc_cap=10**disc_exp),
        workers=int(workers),
    )

"""Class-number divisibility explorer.

Streamlit front end over the sweep engine: pick a theorem and a parameter
grid in the sidebar, run the sweep, and inspect verdicts, invariants and
class numbers.
"""

from __future__ import annotations

import streamlit as st

from src.cli.config import SweepConfig
from src.cli.report import render_csv, render_json, verdicts_to_frame
from src.core.errors import QuadClassError
from src.theorems.sweep import SweepReport, sweep
from src.ui.dashboard import render_dashboard
from src.ui.event_log import render_event_log
from src.ui.sidebar import render_sidebar
from src.ui.trends import render_trends


# ---------------------------------------------------------------------------
# Session state
# ---------------------------------------------------------------------------

def _init_session() -> None:
    if "report" not in st.session_state:
        st.session_state.report = None
    if "config" not in st.session_state:
        st.session_state.config = None


def _run(config: SweepConfig) -> SweepReport:
    with st.spinner(f"Sweeping {config.theorem_id.value} ..."):
        return sweep(config.grid(), config.budgets, config.workers)


# ---------------------------------------------------------------------------
# Main app
# ---------------------------------------------------------------------------

def main() -> None:
    st.set_page_config(page_title="quadclass", layout="wide")
    _init_session()

    st.markdown(
        "# Class-Number Divisibility Explorer\n"
        "*Verdicts for Q(sqrt(x^2 - 4k^n)) over bounded parameter grids*"
    )

    try:
        config = render_sidebar()
    except QuadClassError as exc:
        st.error(str(exc))
        return

    if st.button("Run sweep", type="primary"):
        try:
            st.session_state.report = _run(config)
            st.session_state.config = config
        except QuadClassError as exc:
            st.error(str(exc))

    report: SweepReport = st.session_state.report
    if report is None:
        st.info("Choose a theorem and ranges, then run the sweep.")
        return

    render_dashboard(report)
    st.divider()

    frame = verdicts_to_frame(report.verdicts)
    col_left, col_right = st.columns([3, 2])

    with col_left:
        render_trends(frame)
        st.markdown("### Verdicts")
        st.dataframe(frame, use_container_width=True, hide_index=True)

    with col_right:
        render_event_log(report.verdicts)
        st.download_button(
            "Download JSON",
            render_json(st.session_state.config.to_dict(), report),
            file_name=f"{report.theorem_id.value}.json",
            mime="application/json",
        )
        st.download_button(
            "Download CSV",
            render_csv(report),
            file_name=f"{report.theorem_id.value}.csv",
            mime="text/csv",
        )


if __name__ == "__main__":
    main()

from src.cli.config import ParamRange, SweepConfig, build_config, parse_config_text
from src.cli.paper_examples import ClaimResult, run_checklist
from src.cli.report import render, render_csv, render_json, render_text, verdicts_to_frame

__all__ = [
    "ParamRange",
    "SweepConfig",
    "build_config",
    "parse_config_text",
    "ClaimResult",
    "run_checklist",
    "render",
    "render_csv",
    "render_json",
    "render_text",
    "verdicts_to_frame",
]

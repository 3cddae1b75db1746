from src.theorems.verdict import PARAM_ORDER, Status, TheoremId, TheoremVerdict
from src.theorems.engines import (
    ENGINES,
    field_argument,
    thm6_case,
    verify_thm2,
    verify_thm3,
    verify_thm4,
    verify_thm4_1,
    verify_thm4_2,
    verify_thm5,
    verify_thm6,
)
from src.theorems.invariants import InvariantResult, run_invariants
from src.theorems.sweep import (
    GridSpec,
    SweepReport,
    admissible_e,
    evaluate_point,
    exit_code,
    grid_points,
    sweep,
)

__all__ = [
    "PARAM_ORDER",
    "Status",
    "TheoremId",
    "TheoremVerdict",
    "ENGINES",
    "field_argument",
    "thm6_case",
    "verify_thm2",
    "verify_thm3",
    "verify_thm4",
    "verify_thm4_1",
    "verify_thm4_2",
    "verify_thm5",
    "verify_thm6",
    "InvariantResult",
    "run_invariants",
    "GridSpec",
    "SweepReport",
    "admissible_e",
    "evaluate_point",
    "exit_code",
    "grid_points",
    "sweep",
]

from src.core.constants import (
    BUDGETS,
    BS_EXCEPTIONAL,
    T5_PUBLISHED,
    T6_SPECIAL_POINT,
    Budgets,
)
from src.core.errors import (
    BudgetExceededError,
    ConditionNotApplicable,
    InertPrimeError,
    InputError,
    PrimeSplittingError,
    QuadClassError,
    RamifiedPrimeError,
    UnfactoredError,
)

__all__ = [
    "BUDGETS",
    "BS_EXCEPTIONAL",
    "T5_PUBLISHED",
    "T6_SPECIAL_POINT",
    "Budgets",
    "BudgetExceededError",
    "ConditionNotApplicable",
    "InertPrimeError",
    "InputError",
    "PrimeSplittingError",
    "QuadClassError",
    "RamifiedPrimeError",
    "UnfactoredError",
]

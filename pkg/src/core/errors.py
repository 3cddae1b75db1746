"""Exception types shared by every quadclass module."""

from __future__ import annotations


class QuadClassError(Exception):
    """Base class for toolkit errors."""


class InputError(QuadClassError, ValueError):
    """Arguments outside an operation's domain."""


class UnfactoredError(QuadClassError):
    """Factorization stopped before splitting a composite cofactor."""

    def __init__(self, value: int, residual: int):
        self.value = value
        self.residual = residual
        super().__init__(f"unfactored: residual cofactor {residual} of {value}")


class BudgetExceededError(QuadClassError):
    """A value is larger than the configured cap."""

    def __init__(self, budget_name: str, value: int, cap: int):
        self.budget_name = budget_name
        self.value = value
        self.cap = cap
        super().__init__(f"budget {budget_name} exceeded: |{value}| > {cap}")


class PrimeSplittingError(InputError):
    """The prime does not split in the field."""

    def __init__(self, p: int, D: int, reason: str):
        self.p = p
        self.D = D
        super().__init__(f"{p} does not split in discriminant {D}: {reason}")


class InertPrimeError(PrimeSplittingError):
    def __init__(self, p: int, D: int):
        super().__init__(p, D, "inert")


class RamifiedPrimeError(PrimeSplittingError):
    def __init__(self, p: int, D: int):
        super().__init__(p, D, "ramified")


class ConditionNotApplicable(QuadClassError):
    """A side condition is undefined for the given parameters."""

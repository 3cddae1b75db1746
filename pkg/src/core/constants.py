"""Computation budgets and published reference values."""

from dataclasses import dataclass, replace
from typing import Dict, FrozenSet, Tuple


@dataclass(frozen=True)
class Budgets:
    """Caps that keep every grid point at desk scale."""

    # Largest |x^2 - 4k^n| handed to factorization
    factor_cap: int = 10**12

    # Largest |D| handed to reduced-form enumeration
    disc_cap: int = 10**8

    # Search bound for the H_gamma witnesses (s0, t0)
    witness_bound: int = 10**4

    # Factorization effort
    trial_division_bound: int = 10**4
    rho_max_steps: int = 10**6
    rho_retries: int = 5
    rho_seed: int = 1234

    def replace(self, **overrides: int) -> "Budgets":
        clean = {k: v for k, v in overrides.items() if v is not None}
        for name, value in clean.items():
            if value <= 0:
                raise ValueError(f"budget {name} must be positive, got {value}")
        return replace(self, **clean)


BUDGETS = Budgets()


# Exceptional set E of the Bugeaud-Shorey theorem, gamma stored as gamma^2:
# (gamma^2, D1, D2, p)
BS_EXCEPTIONAL: FrozenSet[Tuple[int, int, int, int]] = frozenset(
    {
        (4, 13, 3, 2),
        (2, 7, 11, 3),
        (1, 2, 1, 3),
        (4, 7, 1, 2),
        (2, 1, 1, 5),
        (2, 1, 1, 13),
        (4, 1, 3, 7),
    }
)


# Theorem 5 published exceptions: (k, n) -> (d, h(d))
T5_PUBLISHED: Dict[Tuple[int, int], Tuple[int, int]] = {
    (5, 2): (-11, 1),
    (5, 4): (-51, 2),
    (13, 2): (-3, 1),
    (13, 8): (-6347, 28),
}


# Theorem 6 (3.2): (q, n, e) -> (d, h(d))
T6_SPECIAL_POINT: Tuple[Tuple[int, int, int], Tuple[int, int]] = ((2, 6, 2), (-7, 1))


# Published field identifications: (x, k, n) -> squarefree part of x^2 - 4k^n
PUBLISHED_FIELDS: Dict[Tuple[int, int, int], int] = {
    (1, 29, 4): -187,
    (9, 5, 2): -19,
    (3, 2, 2): -7,
    (9, 2, 6): -7,
}


# Default search bounds for the bounded Diophantine confirmations
DIOPHANTINE_BOUNDS: Dict[str, int] = {
    "x2_plus_1_eq_2kz": 20,
    "x2_plus_1_eq_2y4": 10**4,
    "x4_minus_2y2": 10**4,
    "2x2_plus_1_eq_3y": 40,
    "lucas_squares": 1000,
}

"""Bounded enumerators for the exponential equations behind the divisibility proofs.

Each enumerator walks the exponent up to an explicit bound and tests the
remaining quantity for squareness, so every returned tuple satisfies its
equation exactly and absence is only claimed up to the bound.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from sympy import isprime

from src.arith.roots import is_perfect_square
from src.core.errors import ConditionNotApplicable, InputError

Solution = Tuple[int, int]


def _require_bound(name: str, value: int) -> None:
    if value < 1:
        raise InputError(f"{name} must be >= 1, got {value}")


def solve_x2_plus_1_eq_2kz(k: int, z_max: int) -> List[Solution]:
    """(x, z) with x^2 + 1 = 2 k^z, x >= 1, 1 <= z <= z_max."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    _require_bound("z_max", z_max)
    out: List[Solution] = []
    power = 1
    for z in range(1, z_max + 1):
        power *= k
        x = is_perfect_square(2 * power - 1)
        if x:
            out.append((x, z))
    return out


def solve_x2_plus_1_eq_2y4(y_max: int) -> List[Solution]:
    """(x, y) with x^2 + 1 = 2 y^4, x >= 1, 1 <= y <= y_max."""
    _require_bound("y_max", y_max)
    out: List[Solution] = []
    for y in range(1, y_max + 1):
        x = is_perfect_square(2 * y**4 - 1)
        if x:
            out.append((x, y))
    return out


def k_with_solutions_at_z1_and_z2(k_max: int) -> List[int]:
    """k <= k_max for which x^2 + 1 = 2k^z is solvable at z = 1 and at z = 2."""
    _require_bound("k_max", k_max)
    return [
        k
        for k in range(1, k_max + 1)
        if is_perfect_square(2 * k - 1) is not None
        and is_perfect_square(2 * k * k - 1) is not None
    ]


def solve_x4_minus_2y2(rhs: int, x_max: int) -> List[Solution]:
    """(x, y) with x^4 - 2y^2 = rhs (rhs = +1 or -1), 1 <= x <= x_max, y >= 1."""
    if rhs not in (1, -1):
        raise InputError(f"rhs must be +1 or -1, got {rhs}")
    _require_bound("x_max", x_max)
    out: List[Solution] = []
    for x in range(1, x_max + 1):
        twice = x**4 - rhs
        if twice % 2:
            continue
        y = is_perfect_square(twice // 2)
        if y:
            out.append((x, y))
    return out


def solve_2x2_plus_1_eq_3y(y_max: int) -> List[Solution]:
    """(x, y) with 2x^2 + 1 = 3^y, x >= 1, 1 <= y <= y_max."""
    _require_bound("y_max", y_max)
    out: List[Solution] = []
    for y in range(1, y_max + 1):
        x = is_perfect_square((3**y - 1) // 2)
        if x:
            out.append((x, y))
    return out


def solve_d1x2_plus_d2_eq_cpy(
    D1: int, D2: int, c: int, p: int, y_max: int
) -> List[Solution]:
    """(x, y) with D1 x^2 + D2 = c p^y, x >= 1, 1 <= y <= y_max."""
    _require_bound("y_max", y_max)
    out: List[Solution] = []
    power = c
    for y in range(1, y_max + 1):
        power *= p
        rest = power - D2
        if rest <= 0 or rest % D1:
            continue
        x = is_perfect_square(rest // D1)
        if x:
            out.append((x, y))
    return out


def lemma32_solutions(D1: int, e: int, q: int, y_max: int) -> List[Solution]:
    """Solutions of D1 x^2 + 3^(2e) = 4 q^y with y <= y_max."""
    if D1 < 1 or D1 % 2 == 0:
        raise InputError(f"D1 must be a positive odd integer, got {D1}")
    if e < 1:
        raise InputError(f"e must be >= 1, got {e}")
    if q == 3 or not isprime(q):
        raise InputError(f"q must be a prime other than 3, got {q}")
    return solve_d1x2_plus_d2_eq_cpy(D1, 3 ** (2 * e), 4, q, y_max)


def lemma32_uniqueness(D1: int, e: int, q: int, y_max: int) -> bool:
    """At most one solution of D1 x^2 + 3^(2e) = 4 q^y up to y_max."""
    return len(lemma32_solutions(D1, e, q, y_max)) <= 1


def thm6_square_condition(q: int, n: int, e: int) -> Optional[int]:
    """Root of the side quantity deciding the n/2 cases, or None.

    Odd q: 2 q^(n/2) - (-3)^e.  q = 2: 2^(n/2 + 1) - 3^e, defined for odd e only.
    """
    if n % 4 != 2:
        raise InputError(f"the square condition needs n = 2 (mod 4), got n={n}")
    if e < 1:
        raise InputError(f"e must be >= 1, got {e}")
    half = n // 2
    if q == 2:
        if e % 2 == 0:
            raise ConditionNotApplicable(f"q=2 with even e={e} has no square condition")
        value = 2 ** (half + 1) - 3**e
    else:
        value = 2 * q**half - (-3) ** e
    return is_perfect_square(value)

"""Exceptional families for D1 x^2 + D2 = gamma^2 p^y.

Outside the finite set E and the families F, G and H_gamma the equation has
at most one positive solution. Membership in F, G and H_gamma is decided by
witness search; the bound used is recorded on every classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from sympy import isprime

from src.arith.roots import is_perfect_square
from src.core.constants import BS_EXCEPTIONAL, BUDGETS
from src.core.errors import InputError
from src.diophantine.equations import Solution, solve_d1x2_plus_d2_eq_cpy
from src.diophantine.sequences import fibonacci, lucas

GAMMA_LABELS = {1: "1", 2: "sqrt2", 4: "2"}


@dataclass(frozen=True)
class BSInstance:
    """(gamma, D1, D2, p) with gamma stored as gamma^2 in {1, 2, 4}."""

    gamma_sq: int
    D1: int
    D2: int
    p: int

    def __post_init__(self) -> None:
        if self.gamma_sq not in GAMMA_LABELS:
            raise InputError(f"gamma^2 must be 1, 2 or 4, got {self.gamma_sq}")
        if self.D1 < 1 or self.D2 < 1:
            raise InputError("D1 and D2 must be positive")
        if not isprime(self.p):
            raise InputError(f"p must be prime, got {self.p}")
        if math.gcd(self.D1, self.D2) != 1:
            raise InputError(f"D1={self.D1} and D2={self.D2} are not coprime")
        if math.gcd(self.D1 * self.D2, self.p) != 1:
            raise InputError(f"p={self.p} divides D1*D2")
        if self.gamma_sq in (2, 4) and self.D2 % 2 == 0:
            raise InputError("D2 must be odd when gamma is sqrt2 or 2")
        if self.p == 2 and self.gamma_sq != 4:
            raise InputError("gamma must be 2 when p = 2")

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.gamma_sq, self.D1, self.D2, self.p)


@dataclass(frozen=True)
class BSClassification:
    instance: BSInstance
    in_E: bool
    in_F: Optional[Tuple[int, int]]  # (h1, epsilon)
    in_G: Optional[int]  # h2
    in_H: Optional[Tuple[int, int]]  # (s0, t0)
    search_bound: int

    @property
    def exceptional(self) -> bool:
        return self.in_E or any(w is not None for w in (self.in_F, self.in_G, self.in_H))

    def to_dict(self) -> dict:
        return {
            "gamma_sq": self.instance.gamma_sq,
            "D1": self.instance.D1,
            "D2": self.instance.D2,
            "p": self.instance.p,
            "in_E": self.in_E,
            "in_F": self.in_F,
            "in_G": self.in_G,
            "in_H": self.in_H,
            "search_bound": self.search_bound,
        }


def fibonacci_family_witness(inst: BSInstance, bound: int) -> Optional[Tuple[int, int]]:
    """(h1, eps) with (F_{h1-2eps}, L_{h1+eps}, F_{h1}) = (D1, D2, p)."""
    h1 = 2
    while h1 <= bound and fibonacci(h1) <= inst.p:
        if fibonacci(h1) == inst.p:
            for eps in (1, -1):
                if fibonacci(h1 - 2 * eps) == inst.D1 and lucas(h1 + eps) == inst.D2:
                    return (h1, eps)
        h1 += 1
    return None


def g_family_witness(inst: BSInstance, bound: int) -> Optional[int]:
    """h2 with (D1, D2) = (1, 4 p^h2 - 1)."""
    if inst.D1 != 1:
        return None
    h2 = 1
    while h2 <= bound:
        value = 4 * inst.p**h2 - 1
        if value == inst.D2:
            return h2
        if value > inst.D2:
            break
        h2 += 1
    return None


def h_family_witness(inst: BSInstance, bound: int) -> Optional[Tuple[int, int]]:
    """(s0, t0) with D1 s0^2 + D2 = gamma^2 p^t0 and 3 D1 s0^2 - D2 = +-gamma^2."""
    for sign in (1, -1):
        numerator = inst.D2 + sign * inst.gamma_sq
        if numerator <= 0 or numerator % (3 * inst.D1):
            continue
        s0 = is_perfect_square(numerator // (3 * inst.D1))
        if not s0 or s0 > bound:
            continue
        total = inst.D1 * s0 * s0 + inst.D2
        if total % inst.gamma_sq:
            continue
        rest, t0 = total // inst.gamma_sq, 0
        while rest % inst.p == 0 and t0 < bound:
            rest //= inst.p
            t0 += 1
        if rest == 1 and t0 >= 1:
            return (s0, t0)
    return None


def classify_bs(inst: BSInstance, search_bound: int = BUDGETS.witness_bound) -> BSClassification:
    if search_bound < 1:
        raise InputError(f"search bound must be positive, got {search_bound}")
    return BSClassification(
        instance=inst,
        in_E=inst.as_tuple() in BS_EXCEPTIONAL,
        in_F=fibonacci_family_witness(inst, search_bound),
        in_G=g_family_witness(inst, search_bound),
        in_H=h_family_witness(inst, search_bound),
        search_bound=search_bound,
    )


def count_solutions_D1x2_plus_D2_eq_g2py(inst: BSInstance, y_max: int) -> List[Solution]:
    return solve_d1x2_plus_d2_eq_cpy(inst.D1, inst.D2, inst.gamma_sq, inst.p, y_max)

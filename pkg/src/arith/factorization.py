"""Deterministic integer factorization and squarefree decomposition.

Trial division to a fixed bound, then seeded Pollard rho on composite
cofactors. A cofactor rho cannot split raises UnfactoredError instead of
being reported as prime.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy import isprime, perfect_power, pollard_rho

from src.core.constants import BUDGETS, Budgets
from src.core.errors import InputError, UnfactoredError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Factorization:
    """Complete factorization of a positive integer."""

    value: int
    factors: Tuple[Tuple[int, int], ...]  # (prime, exponent), primes increasing

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.factors]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)

    def product(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """m = a^2 * d with d squarefree and sign(d) = sign(m)."""

    m: int
    a: int
    d: int

    def to_dict(self) -> Dict[str, int]:
        return {"m": self.m, "a": self.a, "d": self.d}


def factorize(n: int, budgets: Budgets = BUDGETS) -> Factorization:
    """Factor |n| completely; raises UnfactoredError when rho gives up."""
    if n == 0:
        raise InputError("cannot factor 0")
    value = abs(n)
    counts: Dict[int, int] = {}

    rest = _trial_divide(value, budgets.trial_division_bound, counts)
    if rest > 1:
        _split(rest, 1, value, budgets, counts)

    factors = tuple(sorted(counts.items()))
    return Factorization(value=value, factors=factors)


def _trial_divide(n: int, bound: int, counts: Dict[int, int]) -> int:
    p = 2
    while p <= bound and p * p <= n:
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if 1 < n and n <= bound * bound:
        # Every prime factor below the bound is gone, so n is prime
        counts[n] = counts.get(n, 0) + 1
        return 1
    return n


def _split(
    n: int, multiplicity: int, value: int, budgets: Budgets, counts: Dict[int, int]
) -> None:
    if n == 1:
        return
    if isprime(n):
        counts[n] = counts.get(n, 0) + multiplicity
        return

    power = perfect_power(n)
    if power:
        base, exp = power
        _split(int(base), multiplicity * int(exp), value, budgets, counts)
        return

    divisor = None
    for attempt in range(budgets.rho_retries):
        divisor = pollard_rho(
            n,
            a=1 + attempt,
            retries=0,
            seed=budgets.rho_seed + attempt,
            max_steps=budgets.rho_max_steps,
        )
        if divisor:
            break
        logger.debug("rho attempt %d found nothing for %d", attempt, n)

    if not divisor:
        logger.warning("factorization of %d stopped at cofactor %d", value, n)
        raise UnfactoredError(value, n)

    divisor = int(divisor)
    _split(divisor, multiplicity, value, budgets, counts)
    _split(n // divisor, multiplicity, value, budgets, counts)


def is_squarefree(n: int, budgets: Budgets = BUDGETS) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factorize(n, budgets).factors)


def squarefree_decompose(m: int, budgets: Budgets = BUDGETS) -> SquarefreeDecomposition:
    """The unique (a, d) with m = a^2 d, a > 0 and d squarefree."""
    if m == 0:
        raise InputError("squarefree part of 0 is undefined")
    a, d = 1, 1
    for p, e in factorize(m, budgets).factors:
        a *= p ** (e // 2)
        if e % 2:
            d *= p
    if m < 0:
        d = -d
    return SquarefreeDecomposition(m=m, a=a, d=d)

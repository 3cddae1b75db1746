"""Fibonacci and Lucas numbers."""

from __future__ import annotations

from typing import List

from sympy import fibonacci as _fibonacci
from sympy import lucas as _lucas

from src.arith.roots import is_perfect_square
from src.core.errors import InputError


def fibonacci(n: int) -> int:
    if n < 0:
        raise InputError(f"Fibonacci index must be >= 0, got {n}")
    return int(_fibonacci(n))


def lucas(n: int) -> int:
    if n < 0:
        raise InputError(f"Lucas index must be >= 0, got {n}")
    return int(_lucas(n))


def lucas_squares_upto(bound_index: int) -> List[int]:
    """Indices 1 <= n <= bound_index with L_n a perfect square; bound_index >= 3."""
    if bound_index < 3:
        raise InputError(f"bound index must be >= 3, got {bound_index}")
    out: List[int] = []
    prev, cur = 2, 1  # L_0, L_1
    for n in range(1, bound_index + 1):
        if is_perfect_square(cur) is not None:
            out.append(n)
        prev, cur = cur, prev + cur
    return out

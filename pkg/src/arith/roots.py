"""Exact integer roots, perfect-power detection and the Kronecker symbol."""

from __future__ import annotations

import math
from typing import Optional, Tuple

from sympy import integer_nthroot, jacobi_symbol, perfect_power

from src.core.errors import InputError


def isqrt(n: int) -> int:
    """Largest r with r*r <= n."""
    if n < 0:
        raise InputError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> Optional[int]:
    """Return r >= 0 with r*r == n, or None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def integer_root(n: int, e: int) -> Optional[int]:
    """Exact e-th root of n >= 0, or None when n is not an e-th power."""
    if n < 0 or e < 1:
        return None
    root, exact = integer_nthroot(n, e)
    return int(root) if exact else None


def is_perfect_power(n: int) -> Optional[Tuple[int, int]]:
    """(base, exponent) with the largest exponent >= 2, or None."""
    if n < 2:
        raise InputError(f"perfect-power test needs n >= 2, got {n}")
    found = perfect_power(n)
    if not found:
        return None
    base, exp = found
    return int(base), int(exp)


def kronecker(D: int, p: int) -> int:
    """Kronecker symbol (D|p) for a prime p."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    return int(jacobi_symbol(D % p, p))

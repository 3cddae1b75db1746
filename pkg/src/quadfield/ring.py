"""Elements (u + v*sqrt(d))/2 of the maximal order of Q(sqrt(d)), d < 0.

Every element is stored in the half-integer basis, so Z[sqrt(d)] elements
(d = 2, 3 mod 4) carry even u and v.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

from src.arith.factorization import SquarefreeDecomposition, squarefree_decompose
from src.arith.roots import integer_root, is_perfect_square
from src.core.constants import BUDGETS, Budgets
from src.core.errors import InputError


@dataclass(frozen=True)
class RingElement:
    """(u + v*sqrt(d)) / 2 in the ring of integers of Q(sqrt(d))."""

    u: int
    v: int
    d: int

    def __post_init__(self) -> None:
        if self.d >= 0:
            raise InputError(f"only imaginary fields are supported, got d={self.d}")
        if self.d % 4 == 1:
            if (self.u - self.v) % 2:
                raise InputError(f"({self.u}, {self.v}) breaks parity for d={self.d}")
        elif self.u % 2 or self.v % 2:
            raise InputError(f"({self.u}, {self.v}) must be even for d={self.d}")

    @classmethod
    def integer(cls, n: int, d: int) -> RingElement:
        return cls(2 * n, 0, d)

    def __str__(self) -> str:
        return f"({self.u} + {self.v}*sqrt({self.d}))/2"


def _same_field(x: RingElement, y: RingElement) -> None:
    if x.d != y.d:
        raise InputError(f"operands live in different fields: {x.d} vs {y.d}")


def elem_norm(x: RingElement) -> int:
    return (x.u * x.u - x.v * x.v * x.d) // 4


def elem_trace(x: RingElement) -> int:
    return x.u


def elem_conj(x: RingElement) -> RingElement:
    return RingElement(x.u, -x.v, x.d)


def elem_neg(x: RingElement) -> RingElement:
    return RingElement(-x.u, -x.v, x.d)


def elem_mul(x: RingElement, y: RingElement) -> RingElement:
    _same_field(x, y)
    u = (x.u * y.u + x.v * y.v * x.d) // 2
    v = (x.u * y.v + x.v * y.u) // 2
    return RingElement(u, v, x.d)


def elem_pow(x: RingElement, e: int) -> RingElement:
    if e < 0:
        raise InputError(f"negative exponent {e}")
    result = RingElement.integer(1, x.d)
    base = x
    while e:
        if e & 1:
            result = elem_mul(result, base)
        base = elem_mul(base, base)
        e >>= 1
    return result


def unit_group(d: int) -> List[RingElement]:
    """All units of the maximal order."""
    one = RingElement.integer(1, d)
    if d == -1:
        i = RingElement(0, 2, d)
        return [one, i, elem_neg(one), elem_neg(i)]
    if d == -3:
        omega = RingElement(-1, 1, d)
        powers = [one]
        for _ in range(2):
            powers.append(elem_mul(powers[-1], omega))
        return powers + [elem_neg(w) for w in powers]
    return [one, elem_neg(one)]


def square_root_in_ring(x: RingElement) -> Optional[RingElement]:
    """A y with y*y == x, found through the norm/trace criterion."""
    n = elem_norm(x)
    c = is_perfect_square(n)
    if c is None:
        return None
    for sign_c in (c, -c):
        t = is_perfect_square(x.u + 2 * sign_c)
        if t is None:
            continue
        for cand in _root_candidates(x, t):
            if cand is not None and elem_mul(cand, cand) == x:
                return cand
    return None


def _root_candidates(x: RingElement, t: int):
    # y = (t + w*sqrt(d))/2 squares to ((t^2 + w^2 d)/2 + t*w*sqrt(d))/2
    if t == 0:
        w2 = 2 * x.u
        if w2 % x.d:
            return
        w = is_perfect_square(w2 // x.d)
        if w is None:
            return
        yield _try_element(0, w, x.d)
        return
    if x.v % t:
        return
    w = x.v // t
    yield _try_element(t, w, x.d)
    yield _try_element(-t, -w, x.d)


def _try_element(u: int, v: int, d: int) -> Optional[RingElement]:
    try:
        return RingElement(u, v, d)
    except InputError:
        return None


def is_square_in_ring(x: RingElement) -> bool:
    return square_root_in_ring(x) is not None


def is_pth_power_in_ring(x: RingElement, p: int) -> bool:
    """Whether x = y**p for some y in the same order (bounded exact search)."""
    if p == 2:
        return is_square_in_ring(x)
    if p < 2:
        raise InputError(f"exponent must be a prime, got {p}")
    m = integer_root(elem_norm(x), p)
    if m is None:
        return False
    if m == 0:
        return x.u == 0 and x.v == 0

    # N(y) = m  <=>  u'^2 - v'^2 d = 4m
    limit = math.isqrt(4 * m)
    for u in range(-limit, limit + 1):
        rest = 4 * m - u * u
        if rest % (-x.d):
            continue
        v = is_perfect_square(rest // (-x.d))
        if v is None:
            continue
        for vv in {v, -v}:
            y = _try_element(u, vv, x.d)
            if y is not None and elem_pow(y, p) == x:
                return True
    return False


# ---------------------------------------------------------------------------
# Distinguished elements
# ---------------------------------------------------------------------------


def eta(x: int, k: int, n: int, budgets: Budgets = BUDGETS) -> RingElement:
    """(x + a*sqrt(d))/2 where x^2 - 4k^n = a^2 d; norm k^n."""
    dec = field_of(x * x - 4 * k**n, budgets)
    return RingElement(x, dec.a, dec.d)


def tau(k: int, n: int, budgets: Budgets = BUDGETS) -> RingElement:
    """(1 + a*sqrt(d))/2 where 1 - 4k^n = a^2 d."""
    return eta(1, k, n, budgets)


def alpha(q: int, n: int, e: int, budgets: Budgets = BUDGETS) -> RingElement:
    """(3^e + a*sqrt(d))/2 where 3^(2e) - 4q^n = a^2 d."""
    return eta(3**e, q, n, budgets)


def field_of(m: int, budgets: Budgets = BUDGETS) -> SquarefreeDecomposition:
    if m >= 0:
        raise InputError(f"{m} does not define an imaginary quadratic field")
    return squarefree_decompose(m, budgets)

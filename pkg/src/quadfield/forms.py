"""Primitive positive definite binary quadratic forms a x^2 + b xy + c y^2.

Form classes of a fundamental discriminant D < 0 model the ideal classes of
Q(sqrt(d)); composition follows the classical "explaining composition"
construction and every result is returned reduced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from sympy import sqrt_mod

from src.arith.roots import isqrt, kronecker
from src.core.errors import InertPrimeError, InputError, RamifiedPrimeError

# Above this size the vectorized enumeration would overflow int64
_INT64_SAFE_DISC = 2**60


@dataclass(frozen=True)
class QuadForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (abs(b) <= a <= c):
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    @property
    def is_principal(self) -> bool:
        return reduce_form(self).a == 1

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


def _check_definite(f: QuadForm) -> None:
    if f.a <= 0 or f.discriminant >= 0:
        raise InputError(f"{f} is not a positive definite form")


def _check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise InputError(f"{D} is not a negative discriminant")


def principal_form(D: int) -> QuadForm:
    _check_discriminant(D)
    b = D % 2
    return QuadForm(1, b, (b * b - D) // 4)


def reduce_form(f: QuadForm) -> QuadForm:
    """Unique reduced representative of the class of f."""
    _check_definite(f)
    a, b, c = f.a, f.b, f.c
    while True:
        if not (-a < b <= a):
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return QuadForm(a, b, c)


def form_inverse(f: QuadForm) -> QuadForm:
    return reduce_form(QuadForm(f.a, -f.b, f.c))


def _solve_mod(a: int, b: int, m: int) -> Tuple[int, int]:
    """Solve a*x = b (mod m); returns (x0, step) so x = x0 + step*t."""
    g = math.gcd(a, m)
    if b % g:
        raise InputError(f"{a}*x = {b} (mod {m}) has no solution")
    step = m // g
    if step == 1:
        return 0, 1
    return (b // g) * pow(a // g, -1, step) % step, step


def compose(f: QuadForm, g: QuadForm) -> QuadForm:
    """Reduced representative of the product class f*g."""
    if f.discriminant != g.discriminant:
        raise InputError(
            f"cannot compose forms of discriminants {f.discriminant} and {g.discriminant}"
        )
    a1, b1, c1 = reduce_form(f).as_tuple()
    a2, b2, _ = reduce_form(g).as_tuple()

    half_sum = (b1 + b2) // 2
    h = (b2 - b1) // 2
    w = math.gcd(math.gcd(a1, a2), half_sum)
    s, t, u = a1 // w, a2 // w, half_sum // w

    # k*t - l*s = h,  k*u - m*s = c2,  l*u - m*t = c1
    k0, step = _solve_mod(t * u, h * u + s * c1, s * t)
    n, _ = _solve_mod(t * step, h - t * k0, s)
    k = k0 + step * n
    l = (t * k - h) // s
    m = (t * u * k - h * u - s * c1) // (s * t)

    return reduce_form(QuadForm(s * t, w * u - (k * t + l * s), k * l - w * m))


def form_power(f: QuadForm, e: int) -> QuadForm:
    if e < 0:
        return form_power(form_inverse(f), -e)
    result = principal_form(f.discriminant)
    base = reduce_form(f)
    while e:
        if e & 1:
            result = compose(result, base)
        base = compose(base, base)
        e >>= 1
    return result


def form_order(f: QuadForm) -> int:
    """Least s >= 1 with f^s principal."""
    if not f.is_primitive:
        raise InputError(f"{f} is not primitive")
    base = reduce_form(f)
    current = base
    s = 1
    while current.a != 1:
        current = compose(current, base)
        s += 1
    return s


def reduced_forms(D: int) -> List[QuadForm]:
    """All reduced primitive forms of discriminant D, ordered by (a, b)."""
    _check_discriminant(D)
    if -D > _INT64_SAFE_DISC:
        return _reduced_forms_exact(D)

    out: List[QuadForm] = []
    parity = D % 2
    for a in range(1, isqrt(-D // 3) + 1):
        b = np.arange(-a + 1, a + 1, dtype=np.int64)
        b = b[(b & 1) == parity]
        num = b * b - D
        b = b[num % (4 * a) == 0]
        if b.size == 0:
            continue
        c = (b * b - D) // (4 * a)
        keep = (c > a) | ((c == a) & (b >= 0))
        keep &= np.gcd(np.gcd(b, c), a) == 1
        out.extend(QuadForm(a, int(bb), int(cc)) for bb, cc in zip(b[keep], c[keep]))
    return out


def _reduced_forms_exact(D: int) -> List[QuadForm]:
    out: List[QuadForm] = []
    parity = D % 2
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if b % 2 != parity or (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                out.append(QuadForm(a, b, c))
    return out


def split_roots(p: int, D: int) -> List[int]:
    """The b in [0, 2p) with b = D (mod 2) and b^2 = D (mod 4p)."""
    symbol = kronecker(D, p)
    if symbol == 0:
        raise RamifiedPrimeError(p, D)
    if symbol == -1:
        raise InertPrimeError(p, D)
    if p == 2:
        residues = [1]
    else:
        residues = [int(r) for r in sqrt_mod(D % p, p, all_roots=True)]
    candidates = set()
    for r in residues:
        for b in (r, p - r, r + p, 2 * p - r):
            if 0 <= b < 2 * p and b % 2 == D % 2 and (b * b - D) % (4 * p) == 0:
                candidates.add(b)
    return sorted(candidates)


def prime_form_above(p: int, D: int, conjugate: bool = False) -> QuadForm:
    """Reduced form of a prime ideal above the split prime p.

    The smaller root b of D mod 4p is the convention; conjugate=True picks
    the other root, which gives the inverse class.
    """
    _check_discriminant(D)
    roots = split_roots(p, D)
    b = roots[-1] if conjugate else roots[0]
    return reduce_form(QuadForm(p, b, (b * b - D) // (4 * p)))

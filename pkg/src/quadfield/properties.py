"""Randomized and exhaustive property suites for the ring and form layers.

Each suite returns a PropertyReport; failures hold one line per
counterexample so a report can be printed as-is.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np
from sympy import primefactors, primerange

from src.arith.factorization import is_squarefree
from src.arith.roots import kronecker
from src.core.constants import BUDGETS, Budgets
from src.core.errors import UnfactoredError
from src.diophantine.equations import thm6_square_condition
from src.quadfield.classgroup import class_group_of_discriminant, fundamental_discriminant
from src.quadfield.forms import (
    compose,
    form_inverse,
    form_order,
    prime_form_above,
    principal_form,
)
from src.quadfield.ring import (
    RingElement,
    alpha,
    elem_mul,
    elem_neg,
    elem_norm,
    elem_pow,
    elem_trace,
    is_pth_power_in_ring,
    is_square_in_ring,
    square_root_in_ring,
    tau,
    unit_group,
)

logger = logging.getLogger(__name__)


@dataclass
class PropertyReport:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    skipped: int = 0

    @property
    def holds(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        state = "ok" if self.holds else f"FAILED ({len(self.failures)})"
        skipped = f", {self.skipped} skipped" if self.skipped else ""
        return f"{self.name}: {self.checked} checked{skipped}, {state}"


def _sample_squarefree(rng: np.random.Generator, low: int, high: int, count: int) -> List[int]:
    """`count` distinct squarefree d in [-high, -low], in draw order."""
    out: List[int] = []
    seen = set()
    while len(out) < count:
        d = -int(rng.integers(low, high + 1))
        if d in seen:
            continue
        seen.add(d)
        if is_squarefree(d):
            out.append(d)
    return out


def _random_element(rng: np.random.Generator, d: int, span: int) -> RingElement:
    u = int(rng.integers(-span, span + 1))
    v = int(rng.integers(1, span + 1))
    if d % 4 == 1:
        v += (u - v) % 2
    else:
        u, v = 2 * u, 2 * v
    return RingElement(u, v, d)


# ---------------------------------------------------------------------------
# Element properties
# ---------------------------------------------------------------------------


def trace_property(seed: int = 0, fields: int = 20, samples: int = 25) -> PropertyReport:
    """Tr(theta * rho^p) != 1 for non-units rho, units theta, odd p <= 7."""
    rng = np.random.default_rng(seed)
    report = PropertyReport("trace")
    for d in _sample_squarefree(rng, 1, 500, fields):
        units = unit_group(d)
        for _ in range(samples):
            rho = _random_element(rng, d, 12)
            if elem_norm(rho) <= 1:
                continue
            for p in (3, 5, 7):
                rho_p = elem_pow(rho, p)
                for theta in units:
                    report.checked += 1
                    if elem_trace(elem_mul(theta, rho_p)) == 1:
                        report.failures.append(f"d={d}, rho={rho}, theta={theta}, p={p}")
    return report


def square_roots_verify(seed: int = 0, fields: int = 20, samples: int = 25) -> PropertyReport:
    """Squares of random elements are recognized and their roots square back."""
    rng = np.random.default_rng(seed)
    report = PropertyReport("square-roots")
    for d in _sample_squarefree(rng, 1, 500, fields):
        for _ in range(samples):
            y = _random_element(rng, d, 40)
            x = elem_mul(y, y)
            root = square_root_in_ring(x)
            report.checked += 1
            if root is None or elem_pow(root, 2) != x:
                report.failures.append(f"d={d}, x={x}: root {root}")
    return report


def _element_or_skip(
    report: PropertyReport, build: Callable[[], RingElement], m: int, budgets: Budgets
) -> Optional[RingElement]:
    """The element over x^2 - 4k^n = m, or None (counted as skipped) past the budget."""
    if abs(m) > budgets.factor_cap:
        report.skipped += 1
        return None
    try:
        return build()
    except UnfactoredError as exc:
        logger.info("%s: skipping %d: %s", report.name, m, exc)
        report.skipped += 1
        return None


def tau_power_property(
    k_max: int = 99, n_max: int = 10, budgets: Budgets = BUDGETS
) -> PropertyReport:
    """+-tau is never a p-th power for odd k, odd primes p | n."""
    report = PropertyReport("tau-power")
    for k in range(3, k_max + 1, 2):
        for n in range(2, n_max + 1):
            odd_primes = [p for p in primefactors(n) if p != 2]
            if not odd_primes:
                continue
            t = _element_or_skip(
                report, lambda: tau(k, n, budgets), 1 - 4 * k**n, budgets
            )
            if t is None:
                continue
            for p in odd_primes:
                for x in (t, elem_neg(t)):
                    report.checked += 1
                    if is_pth_power_in_ring(x, p):
                        report.failures.append(f"k={k}, n={n}, p={p}: {x} is a power")
    return report


def _square_n_allowed(k: int) -> Tuple[int, ...]:
    if k == 13:
        return (2, 8)
    return (2, 4)


def tau_square_property(
    k_max: int = 99, n_max: int = 10, budgets: Budgets = BUDGETS
) -> PropertyReport:
    """+-tau is a square only at the admissible even n, and at most once for k not in {5, 13}."""
    report = PropertyReport("tau-square")
    for k in range(3, k_max + 1, 2):
        square_at = []
        for n in range(2, n_max + 1, 2):
            t = _element_or_skip(
                report, lambda: tau(k, n, budgets), 1 - 4 * k**n, budgets
            )
            if t is None:
                continue
            report.checked += 1
            if is_square_in_ring(t) or is_square_in_ring(elem_neg(t)):
                square_at.append(n)
        stray = [n for n in square_at if n not in _square_n_allowed(k)]
        if stray:
            report.failures.append(f"k={k}: +-tau square at n={stray}")
        if k not in (5, 13) and len(square_at) > 1:
            report.failures.append(f"k={k}: +-tau square at both n={square_at}")
    return report


def alpha_power_exponents(q: int, n: int, e: int) -> Tuple[int, ...]:
    """Primes p | n for which +-alpha is known not to be a p-th power."""
    primes = tuple(primefactors(n))
    odd = tuple(p for p in primes if p != 2)
    if n % 4 != 2:
        return primes
    if q != 2:
        if q % 3 == 1 or thm6_square_condition(q, n, e) is None:
            return primes
        return odd
    if e % 2 == 0:
        return () if (n, e) == (6, 2) else primes
    return primes if thm6_square_condition(q, n, e) is None else odd


def alpha_power_property(
    q_max: int = 47, n_max: int = 10, budgets: Budgets = BUDGETS
) -> PropertyReport:
    """+-alpha is not a p-th power for each p the case table covers."""
    report = PropertyReport("alpha-power")
    for q in primerange(2, q_max + 1):
        if q == 3:
            continue
        for n in range(1, n_max + 1):
            e = 0
            while 9 ** (e + 1) < 4 * q**n:
                e += 1
                a = _element_or_skip(
                    report, lambda: alpha(q, n, e, budgets), 9**e - 4 * q**n, budgets
                )
                if a is None:
                    continue
                for p in alpha_power_exponents(q, n, e):
                    for x in (a, elem_neg(a)):
                        report.checked += 1
                        if is_pth_power_in_ring(x, p):
                            report.failures.append(f"q={q}, n={n}, e={e}, p={p}: {x}")
    return report


# ---------------------------------------------------------------------------
# Form class group properties
# ---------------------------------------------------------------------------


def _sample_discriminants(rng: np.random.Generator, count: int, high: int) -> List[int]:
    return [fundamental_discriminant(d) for d in _sample_squarefree(rng, 2, high, count)]


def composition_laws(
    seed: int = 0, discriminants: int = 15, triples: int = 100, budgets: Budgets = BUDGETS
) -> PropertyReport:
    """Group laws of composition, plus Lagrange: every form order divides h."""
    rng = np.random.default_rng(seed)
    report = PropertyReport("composition-laws")
    for D in _sample_discriminants(rng, discriminants, 3000):
        summary = class_group_of_discriminant(D, budgets)
        forms = summary.forms
        e = principal_form(D)
        for f in forms:
            report.checked += 1
            if summary.h % form_order(f):
                report.failures.append(f"D={D}: order of {f} does not divide h={summary.h}")
            if compose(f, e) != f or compose(e, f) != f:
                report.failures.append(f"D={D}: principal form is not an identity for {f}")
            if not compose(f, form_inverse(f)).is_principal:
                report.failures.append(f"D={D}: {f} times its inverse is not principal")
        for _ in range(triples):
            f, g, h = (forms[int(i)] for i in rng.integers(0, len(forms), size=3))
            report.checked += 1
            if compose(f, g) != compose(g, f):
                report.failures.append(f"D={D}: {f}, {g} do not commute")
            if compose(compose(f, g), h) != compose(f, compose(g, h)):
                report.failures.append(f"D={D}: ({f}, {g}, {h}) not associative")
    return report


def _first_split_prime(D: int, start: int, limit: int) -> Optional[int]:
    for p in primerange(start, limit):
        if kronecker(D, p) == 1:
            return int(p)
    return None


def conjugate_order_independence(
    seed: int = 0, discriminants: int = 30, primes_per_field: int = 4
) -> PropertyReport:
    """Both prime forms above a split prime have the same order."""
    rng = np.random.default_rng(seed)
    report = PropertyReport("conjugate-order")
    for D in _sample_discriminants(rng, discriminants, 5000):
        p = 1
        for _ in range(primes_per_field):
            p = _first_split_prime(D, p + 1, 2000)
            if p is None:
                break
            report.checked += 1
            s1 = form_order(prime_form_above(p, D))
            s2 = form_order(prime_form_above(p, D, conjugate=True))
            if s1 != s2:
                report.failures.append(f"D={D}, p={p}: orders {s1} and {s2}")
    return report


def run_all(
    seed: int = 0, samples: int = 25, budgets: Budgets = BUDGETS
) -> List[PropertyReport]:
    reports = [
        trace_property(seed, samples=samples),
        square_roots_verify(seed, samples=samples),
        tau_power_property(budgets=budgets),
        tau_square_property(budgets=budgets),
        alpha_power_property(budgets=budgets),
        composition_laws(seed, budgets=budgets),
        conjugate_order_independence(seed),
    ]
    for report in reports:
        logger.info("%s", report)
    return reports

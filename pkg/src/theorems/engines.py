"""Verdict engines: one function per divisibility theorem.

Every engine routes its point into the theorem's published case, computes
the divisor the case guarantees, evaluates h(d), and, when the base k (or q)
is a split prime, the order of the ideal class above it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from sympy import divisors, isprime

from src.arith.factorization import SquarefreeDecomposition, factorize, squarefree_decompose
from src.core.constants import BUDGETS, T5_PUBLISHED, T6_SPECIAL_POINT, Budgets
from src.core.errors import (
    BudgetExceededError,
    InputError,
    PrimeSplittingError,
    UnfactoredError,
)
from src.diophantine.equations import thm6_square_condition
from src.quadfield.classgroup import class_number, fundamental_discriminant
from src.quadfield.forms import form_order, prime_form_above
from src.theorems.verdict import Status, TheoremId, TheoremVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Field:
    dec: SquarefreeDecomposition
    D: int
    h: int

    @property
    def d(self) -> int:
        return self.dec.d


def field_argument(theorem_id: TheoremId, params: Dict[str, int]) -> int:
    """The integer x^2 - 4k^n whose squarefree part labels the field."""
    if theorem_id is TheoremId.T6:
        return 3 ** (2 * params["e"]) - 4 * params["q"] ** params["n"]
    if theorem_id is TheoremId.T41:
        return params["x"] ** 2 - 4 * params["k"] ** params["n"]
    if theorem_id is TheoremId.T42:
        return 1 - 4 * (2 * params["l"] ** params["e"]) ** params["n"]
    return 1 - 4 * params["k"] ** params["n"]


def _field(m: int, budgets: Budgets) -> _Field:
    if abs(m) > budgets.factor_cap:
        raise BudgetExceededError("factor_cap", m, budgets.factor_cap)
    dec = squarefree_decompose(m, budgets)
    D = fundamental_discriminant(dec.d, budgets)
    if -D > budgets.disc_cap:
        raise BudgetExceededError("disc_cap", D, budgets.disc_cap)
    return _Field(dec=dec, D=D, h=class_number(dec.d, budgets))


def _order_above(p: int, field: _Field) -> Optional[int]:
    if not isprime(p):
        return None
    try:
        return form_order(prime_form_above(p, field.D))
    except PrimeSplittingError:
        logger.debug("%d does not split in D=%d; no class order recorded", p, field.D)
        return None


def _params(**values: int) -> Tuple[Tuple[str, int], ...]:
    return tuple(values.items())


def _verdict(theorem_id: TheoremId, params, status: Status, case: str, **kw) -> TheoremVerdict:
    return TheoremVerdict(
        theorem_id=theorem_id, params=params, status=status, case_label=case, **kw
    )


def _judge(
    theorem_id: TheoremId,
    params,
    case: str,
    field: _Field,
    expected: int,
    order_s: Optional[int] = None,
    predicted_orders: Tuple[int, ...] = (),
    full_n: Optional[int] = None,
    extra_ok: bool = True,
    notes: str = "",
) -> TheoremVerdict:
    ok = field.h % expected == 0 and extra_ok
    if predicted_orders and order_s is not None and order_s not in predicted_orders:
        ok = False
        notes = _join(notes, f"order {order_s} not in {list(predicted_orders)}")
    full = None if full_n is None else field.h % full_n == 0
    return _verdict(
        theorem_id,
        params,
        Status.PASS if ok else Status.FAIL,
        case,
        decomposition=field.dec,
        expected_divisor=expected,
        h=field.h,
        order_s=order_s,
        predicted_orders=predicted_orders if order_s is not None else (),
        full_divisibility=full,
        notes=notes,
    )


def _join(*parts: str) -> str:
    return "; ".join(p for p in parts if p)


def _guarded(theorem_id: TheoremId, params, body: Callable[[], TheoremVerdict]) -> TheoremVerdict:
    try:
        return body()
    except BudgetExceededError as exc:
        logger.info("%s %s skipped: %s", theorem_id.value, dict(params), exc)
        return _verdict(theorem_id, params, Status.SKIPPED, "", notes=f"skipped: budget ({exc})")
    except UnfactoredError as exc:
        logger.info("%s %s skipped: %s", theorem_id.value, dict(params), exc)
        return _verdict(theorem_id, params, Status.SKIPPED, "", notes=f"skipped: {exc}")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


# ---------------------------------------------------------------------------
# x = 1 family: Q(sqrt(1 - 4k^n))
# ---------------------------------------------------------------------------


def verify_thm2(k: int, n: int, budgets: Budgets = BUDGETS) -> TheoremVerdict:
    """n odd: n | h(1 - 4k^n)."""
    tid = TheoremId.T2
    params = _params(k=k, n=n)
    _require(k >= 2 and n >= 1, f"need k >= 2 and n >= 1, got k={k}, n={n}")
    if n % 2 == 0:
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes="n must be odd")

    def body() -> TheoremVerdict:
        field = _field(field_argument(tid, dict(params)), budgets)
        return _judge(tid, params, "odd n", field, n, order_s=_order_above(k, field))

    return _guarded(tid, params, body)


def verify_thm3(k: int, n: int, budgets: Budgets = BUDGETS) -> TheoremVerdict:
    """n/2 | h(d) when a = a1 a2 with a1^2 + a2^2 d = +-2 and n even; n | h(d) otherwise."""
    tid = TheoremId.T3
    params = _params(k=k, n=n)
    _require(k >= 2 and n >= 1, f"need k >= 2 and n >= 1, got k={k}, n={n}")

    def body() -> TheoremVerdict:
        field = _field(field_argument(tid, dict(params)), budgets)
        a, d = field.dec.a, field.d
        if d >= -3:
            return _verdict(
                tid, params, Status.NOT_APPLICABLE, "", decomposition=field.dec,
                h=field.h, notes=f"d={d} is not < -3",
            )
        if (n, k, a, d) == (4, 2, 3, -7):
            return _verdict(
                tid, params, Status.EXCLUDED, "", decomposition=field.dec, h=field.h,
                notes="excluded by hypothesis: (n, k, a, d) = (4, 2, 3, -7)",
            )
        order_s = _order_above(k, field)
        if n % 2 == 0:
            for a1 in divisors(a):
                a2 = a // int(a1)
                if int(a1) ** 2 + a2 * a2 * d in (2, -2):
                    return _judge(
                        tid, params, "(1)", field, n // 2, order_s=order_s, full_n=n,
                        notes=f"a1={a1}, a2={a2}",
                    )
        return _judge(tid, params, "(2)", field, n, order_s=order_s)

    return _guarded(tid, params, body)


def verify_thm4(k: int, n: int, budgets: Budgets = BUDGETS) -> TheoremVerdict:
    """n even, k odd >= 3 with a prime factor = 3 (mod 4): n | h."""
    tid = TheoremId.T4
    params = _params(k=k, n=n)
    _require(k >= 2 and n >= 1, f"need k >= 2 and n >= 1, got k={k}, n={n}")
    if n % 2:
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes="n must be even")
    if k % 2 == 0 or k < 3:
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes="k must be odd and >= 3")
    witnesses = [p for p in factorize(k, budgets).primes if p % 4 == 3]
    if not witnesses:
        return _verdict(
            tid, params, Status.NOT_APPLICABLE, "",
            notes="no prime divisor of k is 3 (mod 4)",
        )

    def body() -> TheoremVerdict:
        field = _field(field_argument(tid, dict(params)), budgets)
        return _judge(
            tid, params, f"prime {witnesses[0]} = 3 (mod 4)", field, n,
            order_s=_order_above(k, field),
        )

    return _guarded(tid, params, body)


def verify_thm5(k: int, n: int, budgets: Budgets = BUDGETS) -> TheoremVerdict:
    """k odd > 1, n > 1: n | h except at n in {2, 4} (k = 5), {2, 8} (k = 13),
    or at most one n in {2, 4} for any other k, where n/2 | h."""
    tid = TheoremId.T5
    params = _params(k=k, n=n)
    _require(k >= 2 and n >= 1, f"need k >= 2 and n >= 1, got k={k}, n={n}")
    if k % 2 == 0:
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes="k must be odd")
    if n < 2:
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes="n must be > 1")

    def body() -> TheoremVerdict:
        field = _field(field_argument(tid, dict(params)), budgets)
        prime_k = isprime(k)
        order_s = _order_above(k, field)

        published = T5_PUBLISHED.get((k, n))
        if published is not None:
            d_pub, h_pub = published
            matches = (field.d, field.h) == (d_pub, h_pub)
            return _judge(
                tid, params, f"k={k} exception", field, n // 2,
                order_s=order_s,
                predicted_orders=(n // 2, n) if prime_k else (),
                full_n=n,
                extra_ok=matches,
                notes="" if matches else f"published d={d_pub}, h={h_pub}",
            )
        if k not in (5, 13) and n in (2, 4):
            return _judge(
                tid, params, "possible-exception", field, n // 2,
                order_s=order_s,
                predicted_orders=(n // 2, n) if prime_k else (),
                full_n=n,
            )
        return _judge(
            tid, params, "generic", field, n,
            order_s=order_s,
            predicted_orders=(n,) if prime_k else (),
        )

    return _guarded(tid, params, body)


# ---------------------------------------------------------------------------
# x = 3^e, k = q prime: Q(sqrt(3^(2e) - 4q^n))
# ---------------------------------------------------------------------------


def thm6_case(q: int, n: int, e: int) -> Tuple[str, bool]:
    """(case label, whether only n/2 is guaranteed) for a valid (q, n, e)."""
    if q % 3 == 1 or n % 4 != 2:
        return "(1)", False
    if q != 2:
        if thm6_square_condition(q, n, e) is None:
            return "(2.1)", False
        return "(2.2)", True
    if (q, n, e) == T6_SPECIAL_POINT[0]:
        return "(3.2)", False
    if e % 2 == 0:
        return "(3.1.1)", False
    if thm6_square_condition(q, n, e) is None:
        return "(3.1.2)", False
    return "(3.1.3)", True


def verify_thm6(q: int, n: int, e: int, budgets: Budgets = BUDGETS) -> TheoremVerdict:
    tid = TheoremId.T6
    params = _params(q=q, n=n, e=e)
    _require(n >= 1 and e >= 1, f"need n >= 1 and e >= 1, got n={n}, e={e}")
    if not isprime(q):
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes=f"q={q} is not prime")
    if q == 3:
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes="q must differ from 3")
    if 9**e >= 4 * q**n:
        return _verdict(
            tid, params, Status.NOT_APPLICABLE, "", notes="3^(2e) < 4q^n fails"
        )

    case, halved = thm6_case(q, n, e)

    def body() -> TheoremVerdict:
        field = _field(field_argument(tid, dict(params)), budgets)
        order_s = _order_above(q, field)
        if case == "(3.2)":
            d_pub, h_pub = T6_SPECIAL_POINT[1]
            matches = (field.d, field.h) == (d_pub, h_pub)
            return _judge(
                tid, params, case, field, 1, order_s=order_s, full_n=n,
                extra_ok=matches,
                notes=f"h({field.d}) = {field.h}, n = {n}",
            )
        if halved:
            return _judge(
                tid, params, case, field, n // 2,
                order_s=order_s, predicted_orders=(n // 2, n), full_n=n,
            )
        return _judge(tid, params, case, field, n, order_s=order_s, predicted_orders=(n,))

    return _guarded(tid, params, body)


# ---------------------------------------------------------------------------
# General x: Q(sqrt(x^2 - 4k^n)) and k = 2 l^e
# ---------------------------------------------------------------------------


def verify_thm4_1(x: int, k: int, n: int, budgets: Budgets = BUDGETS) -> TheoremVerdict:
    """k^n < (1 - d)^2 / 16 implies n | h(d)."""
    tid = TheoremId.T41
    params = _params(x=x, k=k, n=n)

    def na(why: str) -> TheoremVerdict:
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes=why)

    if x < 1 or x % 2 == 0:
        return na("x must be a positive odd integer")
    if k < 2:
        return na("k must be > 1")
    if n < 3:
        return na("n must be > 2")
    if math.gcd(k, x) != 1:
        return na("gcd(k, x) must be 1")
    if x * x >= 4 * k**n:
        return na("x^2 < 4k^n fails")

    def body() -> TheoremVerdict:
        field = _field(field_argument(tid, dict(params)), budgets)
        d = field.d
        if d >= -3:
            return _verdict(
                tid, params, Status.NOT_APPLICABLE, "", decomposition=field.dec,
                h=field.h, notes=f"d={d} is not < -3",
            )
        if 16 * k**n >= (1 - d) ** 2:
            return _verdict(
                tid, params, Status.NOT_APPLICABLE, "", decomposition=field.dec,
                h=field.h, notes="k^n < (1 - d)^2/16 fails",
            )
        order_s = _order_above(k, field)
        return _judge(
            tid, params, "k^n < (1-d)^2/16", field, n,
            order_s=order_s, predicted_orders=(n,) if isprime(k) else (),
        )

    return _guarded(tid, params, body)


def verify_thm4_2(l: int, e: int, n: int, budgets: Budgets = BUDGETS) -> TheoremVerdict:  # noqa: E741
    """n | h(1 - 4(2 l^e)^n) for odd prime l unless (n, e) = (4, 0)."""
    tid = TheoremId.T42
    params = _params(l=l, e=e, n=n)
    _require(e >= 0 and n >= 1, f"need e >= 0 and n >= 1, got e={e}, n={n}")
    if l == 2 or not isprime(l):
        return _verdict(tid, params, Status.NOT_APPLICABLE, "", notes=f"l={l} is not an odd prime")
    if (n, e) == (4, 0):
        return _verdict(
            tid, params, Status.EXCLUDED, "", notes="excluded by hypothesis: (n, e) = (4, 0)"
        )

    def body() -> TheoremVerdict:
        field = _field(field_argument(tid, dict(params)), budgets)
        k = 2 * l**e
        return _judge(
            tid, params, "e = 0" if e == 0 else "e > 0", field, n,
            order_s=_order_above(k, field),
        )

    return _guarded(tid, params, body)


ENGINES: Dict[TheoremId, Callable[..., TheoremVerdict]] = {
    TheoremId.T2: verify_thm2,
    TheoremId.T3: verify_thm3,
    TheoremId.T4: verify_thm4,
    TheoremId.T5: verify_thm5,
    TheoremId.T6: verify_thm6,
    TheoremId.T41: verify_thm4_1,
    TheoremId.T42: verify_thm4_2,
}

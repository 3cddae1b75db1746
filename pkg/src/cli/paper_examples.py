"""Fixed checklist of every published numeric value the toolkit reproduces."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Tuple

from src.arith.factorization import squarefree_decompose
from src.core.constants import (
    BUDGETS,
    DIOPHANTINE_BOUNDS,
    PUBLISHED_FIELDS,
    T5_PUBLISHED,
    T6_SPECIAL_POINT,
    Budgets,
)
from src.diophantine.equations import (
    k_with_solutions_at_z1_and_z2,
    lemma32_solutions,
    solve_2x2_plus_1_eq_3y,
    solve_x2_plus_1_eq_2kz,
    solve_x2_plus_1_eq_2y4,
    solve_x4_minus_2y2,
    thm6_square_condition,
)
from src.diophantine.sequences import lucas_squares_upto
from src.quadfield.classgroup import class_number
from src.theorems.engines import verify_thm5, verify_thm6

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Claim:
    label: str
    expected: object
    compute: Callable[[Budgets], object]


@dataclass(frozen=True)
class ClaimResult:
    label: str
    expected: object
    computed: object

    @property
    def matched(self) -> bool:
        return self.expected == self.computed

    def __str__(self) -> str:
        mark = "match" if self.matched else "MISMATCH"
        if self.matched:
            return f"[{mark}] {self.label}"
        return f"[{mark}] {self.label}: expected {self.expected}, computed {self.computed}"


def _field(x: int, k: int, n: int, d: int) -> Claim:
    return Claim(
        f"Q(sqrt({x}^2 - 4*{k}^{n})) = Q(sqrt({d}))",
        d,
        lambda b: squarefree_decompose(x * x - 4 * k**n, b).d,
    )


def _case(label: str, expected: Tuple[str, str], verdict: Callable[[Budgets], object]) -> Claim:
    def compute(b: Budgets) -> Tuple[str, str]:
        v = verdict(b)
        return (v.case_label, v.status.value)

    return Claim(label, expected, compute)


def claims() -> List[Claim]:
    out: List[Claim] = []
    for (k, n), (d, h) in sorted(T5_PUBLISHED.items()):
        out.append(_field(1, k, n, d))
        out.append(Claim(f"h({d}) = {h}", h, lambda b, d=d: class_number(d, b)))
    for (x, k, n), d in sorted(PUBLISHED_FIELDS.items()):
        out.append(_field(x, k, n, d))
    out += [
        Claim("h(-187) = 2", 2, lambda b: class_number(-187, b)),
        Claim("h(-19) = 1", 1, lambda b: class_number(-19, b)),
        Claim("h(-7) = 1", 1, lambda b: class_number(-7, b)),
        _case(
            "t5 k=29, n=4 is a possible exception with n/2 | h",
            ("possible-exception", "pass"),
            lambda b: verify_thm5(29, 4, b),
        ),
        Claim(
            "t5 k=29, n=4: n does not divide h(-187)",
            False,
            lambda b: verify_thm5(29, 4, b).full_divisibility,
        ),
        _case(
            "t6 q=5, n=2, e=2 falls in case (2.2)",
            ("(2.2)", "pass"),
            lambda b: verify_thm6(5, 2, 2, b),
        ),
        _case(
            "t6 q=2, n=2, e=1 falls in case (3.1.3)",
            ("(3.1.3)", "pass"),
            lambda b: verify_thm6(2, 2, 1, b),
        ),
        _case(
            "t6 q=2, n=6, e=2 falls in case (3.2)",
            ("(3.2)", "pass"),
            lambda b: verify_thm6(*T6_SPECIAL_POINT[0], b),
        ),
        Claim("2*5^1 - (-3)^2 = 1 is a square", 1, lambda b: thm6_square_condition(5, 2, 2)),
        Claim("2^2 - 3^1 = 1 is a square", 1, lambda b: thm6_square_condition(2, 2, 1)),
        Claim(
            "x^2+1=2*13^z solutions (5,1),(239,4)",
            [(5, 1), (239, 4)],
            lambda b: solve_x2_plus_1_eq_2kz(13, DIOPHANTINE_BOUNDS["x2_plus_1_eq_2kz"]),
        ),
        Claim(
            "x^2+1=2y^4 solutions (1,1),(239,13)",
            [(1, 1), (239, 13)],
            lambda b: solve_x2_plus_1_eq_2y4(DIOPHANTINE_BOUNDS["x2_plus_1_eq_2y4"]),
        ),
        Claim(
            "x^2+1=2k^z solvable at z=1 and z=2 only for k in {1, 5}",
            [1, 5],
            lambda b: k_with_solutions_at_z1_and_z2(1000),
        ),
        Claim(
            "x^4-2y^2=1 has no solutions",
            [],
            lambda b: solve_x4_minus_2y2(1, DIOPHANTINE_BOUNDS["x4_minus_2y2"]),
        ),
        Claim(
            "x^4-2y^2=-1 solutions (1,1)",
            [(1, 1)],
            lambda b: solve_x4_minus_2y2(-1, DIOPHANTINE_BOUNDS["x4_minus_2y2"]),
        ),
        Claim(
            "2x^2+1=3^y solutions (1,1),(2,2),(11,5)",
            [(1, 1), (2, 2), (11, 5)],
            lambda b: solve_2x2_plus_1_eq_3y(DIOPHANTINE_BOUNDS["2x2_plus_1_eq_3y"]),
        ),
        Claim(
            "Lucas squares at indices 1, 3",
            [1, 3],
            lambda b: lucas_squares_upto(DIOPHANTINE_BOUNDS["lucas_squares"]),
        ),
        Claim(
            "19x^2+3^4=4*5^y has the single solution (1,2)",
            [(1, 2)],
            lambda b: lemma32_solutions(19, 2, 5, 12),
        ),
    ]
    return out


def run_checklist(budgets: Budgets = BUDGETS) -> List[ClaimResult]:
    results = []
    for claim in claims():
        try:
            computed = claim.compute(budgets)
        except Exception as exc:
            logger.warning("claim %r raised %s", claim.label, exc)
            computed = f"error: {exc}"
        results.append(ClaimResult(claim.label, claim.expected, computed))
    return results

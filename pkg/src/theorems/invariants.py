"""Cross-point checks run over the verdicts of one sweep."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Set, Tuple

from src.core.constants import T5_PUBLISHED
from src.theorems.engines import field_argument
from src.theorems.verdict import TheoremId, TheoremVerdict


@dataclass(frozen=True)
class InvariantResult:
    name: str
    checked: int
    violations: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "checked": self.checked,
            "holds": self.holds,
            "violations": list(self.violations),
        }


def _evaluated(verdicts: Sequence[TheoremVerdict]) -> List[TheoremVerdict]:
    return [v for v in verdicts if v.decomposition is not None and v.h is not None]


def _label(v: TheoremVerdict) -> str:
    return ", ".join(f"{k}={val}" for k, val in v.params)


def check_decomposition(verdicts: Sequence[TheoremVerdict]) -> InvariantResult:
    """a^2 d equals the field argument exactly."""
    bad = []
    rows = _evaluated(verdicts)
    for v in rows:
        dec = v.decomposition
        m = field_argument(v.theorem_id, dict(v.params))
        if dec.m != m or dec.a * dec.a * dec.d != m:
            bad.append(f"{_label(v)}: a={dec.a}, d={dec.d}, m={m}")
    return InvariantResult("decomposition", len(rows), tuple(bad))


def check_at_most_one_exception(verdicts: Sequence[TheoremVerdict]) -> InvariantResult:
    """For k outside {5, 13}, the n with n not dividing h form a subset of {2, 4} of size <= 1."""
    misses: Dict[int, Set[int]] = defaultdict(set)
    seen: Set[int] = set()
    for v in _evaluated(verdicts):
        k, n = v.param("k"), v.param("n")
        if k in (5, 13):
            continue
        seen.add(k)
        if v.h % n:
            misses[k].add(n)
    bad = [
        f"k={k}: n not dividing h at {sorted(ns)}"
        for k, ns in sorted(misses.items())
        if not ns <= {2, 4} or len(ns) > 1
    ]
    return InvariantResult("at-most-one-exception", len(seen), tuple(bad))


def check_published_exceptions(verdicts: Sequence[TheoremVerdict]) -> InvariantResult:
    bad = []
    checked = 0
    for v in _evaluated(verdicts):
        key = (v.param("k"), v.param("n"))
        if key not in T5_PUBLISHED:
            continue
        checked += 1
        if (v.d, v.h) != T5_PUBLISHED[key]:
            bad.append(f"{_label(v)}: got d={v.d}, h={v.h}, published {T5_PUBLISHED[key]}")
    return InvariantResult("published-exceptions", checked, tuple(bad))


def _may_hit_minus_three(k: int, n: int) -> bool:
    if k == 5:
        return n in (2, 4)
    if k == 13:
        return n in (2, 8)
    return n == 2


def check_d_not_minus_three(verdicts: Sequence[TheoremVerdict]) -> InvariantResult:
    bad = []
    checked = 0
    for v in _evaluated(verdicts):
        if _may_hit_minus_three(v.param("k"), v.param("n")):
            continue
        checked += 1
        if v.d == -3:
            bad.append(f"{_label(v)}: d=-3")
    return InvariantResult("d-not-minus-three", checked, tuple(bad))


def check_odd_base_congruence(verdicts: Sequence[TheoremVerdict]) -> InvariantResult:
    """d = 5 (mod 8) for odd q and d = 1 (mod 8) for q = 2."""
    bad = []
    rows = _evaluated(verdicts)
    for v in rows:
        want = 1 if v.param("q") == 2 else 5
        if v.d % 8 != want:
            bad.append(f"{_label(v)}: d={v.d} is {v.d % 8} mod 8, expected {want}")
    return InvariantResult("d-mod-8", len(rows), tuple(bad))


def check_order_strengthening(verdicts: Sequence[TheoremVerdict]) -> InvariantResult:
    """Where an order is predicted, the class above the base prime has it."""
    bad = []
    checked = 0
    for v in _evaluated(verdicts):
        if v.order_s is None or not v.predicted_orders:
            continue
        checked += 1
        if v.order_s not in v.predicted_orders:
            bad.append(
                f"{_label(v)}: order {v.order_s} not in {list(v.predicted_orders)}"
            )
    return InvariantResult("order-strengthening", checked, tuple(bad))


Check = Callable[[Sequence[TheoremVerdict]], InvariantResult]

INVARIANTS: Dict[TheoremId, Tuple[Check, ...]] = {
    TheoremId.T2: (check_decomposition,),
    TheoremId.T3: (check_decomposition,),
    TheoremId.T4: (check_decomposition,),
    TheoremId.T5: (
        check_decomposition,
        check_at_most_one_exception,
        check_published_exceptions,
        check_d_not_minus_three,
        check_order_strengthening,
    ),
    TheoremId.T6: (check_decomposition, check_odd_base_congruence, check_order_strengthening),
    TheoremId.T41: (check_decomposition, check_order_strengthening),
    TheoremId.T42: (check_decomposition,),
}


def run_invariants(
    theorem_id: TheoremId, verdicts: Sequence[TheoremVerdict]
) -> List[InvariantResult]:
    return [check(verdicts) for check in INVARIANTS[theorem_id]]

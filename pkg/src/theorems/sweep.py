"""Grid sweeps over a theorem's parameter space."""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from src.core.constants import BUDGETS, Budgets
from src.core.errors import InputError
from src.theorems.engines import ENGINES
from src.theorems.invariants import InvariantResult, run_invariants
from src.theorems.verdict import PARAM_ORDER, Status, TheoremId, TheoremVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSpec:
    """Axis values per parameter name.

    For Thm 6 the ``e`` axis may be omitted; every e >= 1 with
    3^(2e) < 4 q^n is then swept.
    """

    theorem_id: TheoremId
    axes: Mapping[str, Tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        names = PARAM_ORDER[self.theorem_id]
        unknown = set(self.axes) - set(names)
        if unknown:
            raise InputError(
                f"{self.theorem_id.value} takes parameters {list(names)}, got {sorted(unknown)}"
            )
        missing = [n for n in names if n not in self.axes]
        if missing and not (self.theorem_id is TheoremId.T6 and missing == ["e"]):
            raise InputError(f"{self.theorem_id.value}: missing ranges for {missing}")

    @property
    def auto_e(self) -> bool:
        return self.theorem_id is TheoremId.T6 and "e" not in self.axes


def admissible_e(q: int, n: int) -> range:
    """All e >= 1 with 3^(2e) < 4 q^n."""
    bound = 4 * q**n
    e = 0
    while 9 ** (e + 1) < bound:
        e += 1
    return range(1, e + 1)


def grid_points(spec: GridSpec) -> Iterator[Dict[str, int]]:
    """Lexicographic in the theorem's parameter order."""
    names = PARAM_ORDER[spec.theorem_id]
    if spec.auto_e:
        for q, n in itertools.product(spec.axes["q"], spec.axes["n"]):
            for e in admissible_e(q, n):
                yield {"q": q, "n": n, "e": e}
        return
    for values in itertools.product(*(spec.axes[name] for name in names)):
        yield dict(zip(names, values))


def evaluate_point(
    theorem_id: TheoremId, params: Mapping[str, int], budgets: Budgets = BUDGETS
) -> TheoremVerdict:
    """Run one engine; any exception becomes an ERROR verdict."""
    try:
        return ENGINES[theorem_id](**params, budgets=budgets)
    except Exception as exc:
        logger.warning("%s %s failed: %s", theorem_id.value, dict(params), exc)
        return TheoremVerdict(
            theorem_id=theorem_id,
            params=tuple((name, params[name]) for name in PARAM_ORDER[theorem_id]),
            status=Status.ERROR,
            notes=f"{type(exc).__name__}: {exc}",
        )


def _evaluate_packed(job: Tuple[TheoremId, Dict[str, int], Budgets]) -> TheoremVerdict:
    return evaluate_point(*job)


@dataclass
class SweepReport:
    theorem_id: TheoremId
    verdicts: List[TheoremVerdict] = field(default_factory=list)
    invariants: List[InvariantResult] = field(default_factory=list)

    @property
    def counts(self) -> Dict[str, int]:
        tally = Counter(v.status for v in self.verdicts)
        return {status.value: tally.get(status, 0) for status in Status}

    @property
    def invariants_hold(self) -> bool:
        return all(inv.holds for inv in self.invariants)

    def summary(self) -> Dict[str, object]:
        return {
            "theorem": self.theorem_id.value,
            "total": len(self.verdicts),
            "counts": self.counts,
            "invariants": [inv.to_dict() for inv in self.invariants],
            "invariants_hold": self.invariants_hold,
        }

    def failures(self) -> List[TheoremVerdict]:
        return [v for v in self.verdicts if v.status in (Status.FAIL, Status.ERROR)]


def sweep(
    spec: GridSpec,
    budgets: Budgets = BUDGETS,
    workers: int = 1,
) -> SweepReport:
    points = list(grid_points(spec))
    logger.info(
        "sweeping %s over %d points (workers=%d)", spec.theorem_id.value, len(points), workers
    )
    jobs = [(spec.theorem_id, p, budgets) for p in points]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(jobs) // (4 * workers))
            verdicts = list(pool.map(_evaluate_packed, jobs, chunksize=chunk))
    else:
        verdicts = [_evaluate_packed(job) for job in jobs]
    report = SweepReport(spec.theorem_id, verdicts, run_invariants(spec.theorem_id, verdicts))
    for inv in report.invariants:
        if not inv.holds:
            logger.warning("invariant %s violated: %s", inv.name, "; ".join(inv.violations))
    return report


def exit_code(report: SweepReport, strict: bool = False) -> int:
    """0 when every verdict and invariant is clean; SKIPPED counts only when strict."""
    bad: Sequence[Status] = (Status.FAIL, Status.ERROR)
    if strict:
        bad = (*bad, Status.SKIPPED)
    if any(v.status in bad for v in report.verdicts) or not report.invariants_hold:
        return 1
    return 0


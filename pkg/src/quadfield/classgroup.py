"""Class groups of imaginary quadratic fields via reduced forms."""

from __future__ import annotations

import logging
import os
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple

from src.arith.factorization import is_squarefree
from src.core.constants import BUDGETS, Budgets
from src.core.errors import BudgetExceededError, InputError
from src.quadfield.forms import (
    QuadForm,
    form_order,
    prime_form_above,
    reduced_forms,
)

logger = logging.getLogger(__name__)

CACHE_ENV_VAR = "QUADCLASS_CACHE_DIR"
CACHE_FILE_NAME = "classnumbers.txt"


@dataclass(frozen=True)
class ClassGroupSummary:
    D: int
    h: int
    forms: Tuple[QuadForm, ...]

    @property
    def principal(self) -> QuadForm:
        return self.forms[0]


def fundamental_discriminant(d: int, budgets: Budgets = BUDGETS) -> int:
    """d if d = 1 (mod 4), else 4d, for squarefree d."""
    if d in (0, 1):
        raise InputError(f"d={d} does not define a quadratic field")
    if not is_squarefree(d, budgets):
        raise InputError(f"d={d} is not squarefree")
    return d if d % 4 == 1 else 4 * d


class ClassGroupCache:
    """Append-only map D -> ClassGroupSummary, optionally persisted as "D h" lines."""

    def __init__(self) -> None:
        self._summaries: Dict[int, ClassGroupSummary] = {}
        self._persisted: Dict[int, int] = {}
        self._loaded_from: Optional[Path] = None
        self._lock = threading.Lock()

    def summary(self, D: int) -> Optional[ClassGroupSummary]:
        return self._summaries.get(D)

    def store(self, summary: ClassGroupSummary) -> ClassGroupSummary:
        with self._lock:
            existing = self._summaries.setdefault(summary.D, summary)
        if existing is summary:
            self._persist(summary.D, summary.h)
        return existing

    def persisted_h(self, D: int) -> Optional[int]:
        path = _cache_path()
        if path is None:
            return None
        with self._lock:
            if self._loaded_from != path:
                self._persisted = _read_cache(path)
                self._loaded_from = path
            return self._persisted.get(D)

    def clear(self) -> None:
        with self._lock:
            self._summaries.clear()
            self._persisted.clear()
            self._loaded_from = None

    def _persist(self, D: int, h: int) -> None:
        path = _cache_path()
        if path is None:
            return
        with self._lock:
            if self._loaded_from != path:
                self._persisted = _read_cache(path)
                self._loaded_from = path
            if D in self._persisted:
                return
            path.parent.mkdir(parents=True, exist_ok=True)
            with path.open("a", encoding="utf-8") as fh:
                fh.write(f"{D} {h}\n")
            self._persisted[D] = h
        logger.debug("persisted h(%d) = %d to %s", D, h, path)


def _cache_path() -> Optional[Path]:
    directory = os.environ.get(CACHE_ENV_VAR)
    if not directory:
        return None
    return Path(directory) / CACHE_FILE_NAME


def _read_cache(path: Path) -> Dict[int, int]:
    out: Dict[int, int] = {}
    if not path.exists():
        return out
    for line in path.read_text(encoding="utf-8").splitlines():
        parts = line.split()
        if len(parts) != 2:
            continue
        try:
            out[int(parts[0])] = int(parts[1])
        except ValueError:
            logger.warning("ignoring malformed cache line %r in %s", line, path)
    return out


CLASS_GROUP_CACHE = ClassGroupCache()


def class_group_of_discriminant(D: int, budgets: Budgets = BUDGETS) -> ClassGroupSummary:
    if -D > budgets.disc_cap:
        raise BudgetExceededError("disc_cap", D, budgets.disc_cap)
    cached = CLASS_GROUP_CACHE.summary(D)
    if cached is not None:
        return cached
    forms = tuple(reduced_forms(D))
    logger.debug("enumerated %d reduced forms for D=%d", len(forms), D)
    return CLASS_GROUP_CACHE.store(ClassGroupSummary(D=D, h=len(forms), forms=forms))


def class_group(d: int, budgets: Budgets = BUDGETS) -> ClassGroupSummary:
    if d >= 0:
        raise InputError(f"class groups are computed for d < 0 only, got {d}")
    return class_group_of_discriminant(fundamental_discriminant(d, budgets), budgets)


def class_number(d: int, budgets: Budgets = BUDGETS) -> int:
    """h(d) for squarefree d < 0."""
    if d >= 0:
        raise InputError(f"class numbers are computed for d < 0 only, got {d}")
    D = fundamental_discriminant(d, budgets)
    cached = CLASS_GROUP_CACHE.summary(D)
    if cached is not None:
        return cached.h
    persisted = CLASS_GROUP_CACHE.persisted_h(D)
    if persisted is not None:
        return persisted
    return class_group_of_discriminant(D, budgets).h


def ideal_class_order_above(p: int, d: int, budgets: Budgets = BUDGETS) -> int:
    """Order of the class of a prime ideal above the split prime p."""
    D = fundamental_discriminant(d, budgets)
    if -D > budgets.disc_cap:
        raise BudgetExceededError("disc_cap", D, budgets.disc_cap)
    return form_order(prime_form_above(p, D))

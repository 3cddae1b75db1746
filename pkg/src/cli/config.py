"""Sweep configuration: parameter ranges, budgets and output settings.

A config file is flat ``key = value`` text with ``#`` comments. Keys mirror
the command-line flags without their leading dashes::

    theorem = t5
    k-odd = 3..99
    n-range = 2..10
    format = json
    workers = 4
"""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Mapping, Optional, Tuple

from sympy import isprime

from src.core.constants import BUDGETS, Budgets
from src.core.errors import InputError
from src.theorems.sweep import GridSpec
from src.theorems.verdict import PARAM_ORDER, TheoremId

FORMATS = ("json", "csv", "text")
FILTERS = ("range", "odd", "even", "prime")

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class ParamRange:
    """Inclusive integer range with an optional step and value filter."""

    lo: int
    hi: int
    step: int = 1
    keep: str = "range"
    explicit: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.keep not in FILTERS:
            raise InputError(f"unknown filter {self.keep!r}, expected one of {FILTERS}")
        if self.step < 1:
            raise InputError(f"step must be positive, got {self.step}")
        if not self.explicit and self.lo > self.hi:
            raise InputError(f"empty range {self.lo}..{self.hi}")

    @classmethod
    def parse(cls, text: str, keep: str = "range") -> ParamRange:
        """Accepts ``lo..hi``, ``lo..hi/step``, a single value, or a comma list."""
        m = _RANGE.match(text)
        if m:
            lo, hi, step = int(m.group(1)), int(m.group(2)), int(m.group(3) or 1)
            return cls(lo, hi, step, keep)
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise InputError(f"cannot parse range {text!r}") from None
        return cls(min(values), max(values), 1, keep, explicit=values)

    def values(self) -> Tuple[int, ...]:
        raw: Iterable[int] = self.explicit or range(self.lo, self.hi + 1, self.step)
        if self.keep == "odd":
            return tuple(v for v in raw if v % 2)
        if self.keep == "even":
            return tuple(v for v in raw if v % 2 == 0)
        if self.keep == "prime":
            return tuple(v for v in raw if isprime(v))
        return tuple(raw)

    def describe(self) -> str:
        body = ",".join(map(str, self.explicit)) if self.explicit else f"{self.lo}..{self.hi}"
        if not self.explicit and self.step != 1:
            body += f"/{self.step}"
        return body if self.keep == "range" else f"{self.keep}:{body}"


@dataclass(frozen=True)
class SweepConfig:
    theorem_id: TheoremId
    ranges: Mapping[str, ParamRange] = field(default_factory=dict)
    budgets: Budgets = BUDGETS
    output_format: str = "json"
    out: Optional[Path] = None
    workers: int = 1
    strict: bool = False

    def __post_init__(self) -> None:
        if self.output_format not in FORMATS:
            raise InputError(f"format must be one of {FORMATS}, got {self.output_format!r}")
        if self.workers < 1:
            raise InputError(f"workers must be >= 1, got {self.workers}")
        _check_parity(self.theorem_id, self.ranges)
        _check_bounds(self.theorem_id, self.ranges)

    def grid(self) -> GridSpec:
        return GridSpec(
            self.theorem_id, {name: r.values() for name, r in self.ranges.items()}
        )

    def to_dict(self) -> Dict[str, object]:
        """Report header; integers as decimal strings."""
        b = self.budgets
        return {
            "theorem": self.theorem_id.value,
            "ranges": {name: self.ranges[name].describe() for name in sorted(self.ranges)},
            "budgets": {
                "factor_cap": str(b.factor_cap),
                "disc_cap": str(b.disc_cap),
                "witness_bound": str(b.witness_bound),
            },
            "format": self.output_format,
            "strict": self.strict,
        }


# Filters that contradict a theorem's hypotheses on a parameter
_CONTRADICTIONS = {
    (TheoremId.T2, "n", "even"),
    (TheoremId.T4, "n", "odd"),
    (TheoremId.T4, "k", "even"),
    (TheoremId.T5, "k", "even"),
    (TheoremId.T41, "x", "even"),
}


def _check_parity(theorem_id: TheoremId, ranges: Mapping[str, ParamRange]) -> None:
    names = PARAM_ORDER[theorem_id]
    for name, r in ranges.items():
        if name not in names:
            raise InputError(f"{theorem_id.value} has no parameter {name!r}; expected {list(names)}")
        if (theorem_id, name, r.keep) in _CONTRADICTIONS:
            raise InputError(
                f"{name}-{r.keep} contradicts the hypotheses of {theorem_id.value}"
            )


# Smallest value each parameter may take
_MINIMUM = {"k": 2, "n": 1, "q": 2, "x": 1, "l": 2, "e": 1}
_MINIMUM_BY_THEOREM = {(TheoremId.T42, "e"): 0}


def _check_bounds(theorem_id: TheoremId, ranges: Mapping[str, ParamRange]) -> None:
    for name, r in ranges.items():
        floor = _MINIMUM_BY_THEOREM.get((theorem_id, name), _MINIMUM[name])
        if r.lo < floor:
            raise InputError(
                f"{theorem_id.value}: {name} must be >= {floor}, got range {r.describe()}"
            )


SETTING_KEYS = frozenset(
    {
        "theorem",
        "format",
        "out",
        "workers",
        "strict",
        "budget-factor",
        "budget-disc",
        "witness-bound",
    }
)


def _is_known_key(key: str) -> bool:
    if key in SETTING_KEYS:
        return True
    name, _, keep = key.partition("-")
    return name in _MINIMUM and (not keep or keep in FILTERS)


def parse_config_text(text: str) -> Dict[str, str]:
    """Flat ``key = value`` pairs; later keys win."""
    out: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"config line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise InputError(f"config line {lineno}: empty key or value in {raw!r}")
        out[key] = value
    return out


def load_config_file(path: Path) -> Dict[str, str]:
    try:
        return parse_config_text(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc


def _as_int(key: str, value: str) -> int:
    """Integer literal or exact scientific notation such as 1.5e17."""
    try:
        number = Decimal(value.strip())
    except InvalidOperation:
        raise InputError(f"{key} must be an integer, got {value!r}") from None
    if not number.is_finite() or number != number.to_integral_value():
        raise InputError(f"{key} must be an integer, got {value!r}")
    return int(number)


def _as_bool(key: str, value: str) -> bool:
    lowered = value.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise InputError(f"{key} must be a boolean, got {value!r}")


def build_config(settings: Mapping[str, str]) -> SweepConfig:
    """SweepConfig from flat settings (config file merged with flags)."""
    unknown = sorted(key for key in settings if not _is_known_key(key))
    if unknown:
        raise InputError(f"unknown config keys: {unknown}")
    if "theorem" not in settings:
        raise InputError("no theorem given")
    try:
        theorem_id = TheoremId(settings["theorem"].lower())
    except ValueError:
        raise InputError(f"unknown theorem {settings['theorem']!r}") from None

    ranges: Dict[str, ParamRange] = {}
    for key, value in settings.items():
        name, _, keep = key.partition("-")
        if name not in PARAM_ORDER[theorem_id]:
            continue
        if name in ranges:
            raise InputError(f"parameter {name!r} given more than once")
        ranges[name] = ParamRange.parse(value, keep or "range")

    budgets = BUDGETS.replace(
        factor_cap=_opt_int(settings, "budget-factor"),
        disc_cap=_opt_int(settings, "budget-disc"),
        witness_bound=_opt_int(settings, "witness-bound"),
    )
    out = settings.get("out")
    return SweepConfig(
        theorem_id=theorem_id,
        ranges=ranges,
        budgets=budgets,
        output_format=settings.get("format", "json"),
        out=Path(out) if out else None,
        workers=_as_int("workers", settings.get("workers", "1")),
        strict=_as_bool("strict", settings.get("strict", "false")),
    )


def _opt_int(settings: Mapping[str, str], key: str) -> Optional[int]:
    return _as_int(key, settings[key]) if key in settings else None

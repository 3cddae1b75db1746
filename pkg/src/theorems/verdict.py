"""Outcome of checking one theorem at one parameter point."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from src.arith.factorization import SquarefreeDecomposition


class TheoremId(str, Enum):
    T2 = "t2"
    T3 = "t3"
    T4 = "t4"
    T5 = "t5"
    T6 = "t6"
    T41 = "t41"
    T42 = "t42"


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"
    EXCLUDED = "excluded"
    SKIPPED = "skipped"
    ERROR = "error"


# Parameter names per theorem, in grid order
PARAM_ORDER: Dict[TheoremId, Tuple[str, ...]] = {
    TheoremId.T2: ("k", "n"),
    TheoremId.T3: ("k", "n"),
    TheoremId.T4: ("k", "n"),
    TheoremId.T5: ("k", "n"),
    TheoremId.T6: ("q", "n", "e"),
    TheoremId.T41: ("x", "k", "n"),
    TheoremId.T42: ("l", "e", "n"),
}


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: TheoremId
    params: Tuple[Tuple[str, int], ...]
    status: Status
    case_label: str = ""
    decomposition: Optional[SquarefreeDecomposition] = None
    expected_divisor: Optional[int] = None
    h: Optional[int] = None
    order_s: Optional[int] = None
    predicted_orders: Tuple[int, ...] = ()
    full_divisibility: Optional[bool] = None
    notes: str = ""

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    @property
    def d(self) -> Optional[int]:
        return self.decomposition.d if self.decomposition else None

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def to_dict(self) -> Dict[str, object]:
        """JSON-ready mapping; integers become decimal strings."""
        dec = self.decomposition
        return {
            "theorem": self.theorem_id.value,
            "params": {k: str(v) for k, v in self.params},
            "status": self.status.value,
            "case": self.case_label,
            "m": _s(dec.m if dec else None),
            "a": _s(dec.a if dec else None),
            "d": _s(dec.d if dec else None),
            "expected_divisor": _s(self.expected_divisor),
            "h": _s(self.h),
            "order_s": _s(self.order_s),
            "predicted_orders": [str(o) for o in self.predicted_orders],
            "full_divisibility": self.full_divisibility,
            "pass": self.passed,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> TheoremVerdict:
        dec = None
        if data.get("m") is not None:
            dec = SquarefreeDecomposition(
                m=int(data["m"]), a=int(data["a"]), d=int(data["d"])
            )
        return cls(
            theorem_id=TheoremId(data["theorem"]),
            params=tuple((k, int(v)) for k, v in dict(data["params"]).items()),
            status=Status(data["status"]),
            case_label=str(data.get("case", "")),
            decomposition=dec,
            expected_divisor=_i(data.get("expected_divisor")),
            h=_i(data.get("h")),
            order_s=_i(data.get("order_s")),
            predicted_orders=tuple(int(o) for o in data.get("predicted_orders", [])),
            full_divisibility=data.get("full_divisibility"),
            notes=str(data.get("notes", "")),
        )


def _s(value: Optional[int]) -> Optional[str]:
    return None if value is None else str(value)


def _i(value: Optional[object]) -> Optional[int]:
    return None if value is None else int(value)

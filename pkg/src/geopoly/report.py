"""Verification report record shared by all identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"
EXPECTED_FAIL_CONFIRMED = "expected_fail_confirmed"

EXACT = "exact"


def fmt_rational(x: Fraction) -> str:
    """Serialize exactly, never as a decimal."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if hasattr(value, "alpha") and hasattr(value, "beta") and hasattr(value, "r"):
        return {
            "alpha": fmt_rational(value.alpha),
            "beta": fmt_rational(value.beta),
            "r": fmt_rational(value.r),
        }
    return value


@dataclass
class CheckReport:
    """Outcome of verifying one identity instance.

    Exact checks carry tolerance="exact" and a rational witness on failure;
    numeric checks carry the decimal threshold used and the observed |diff|.
    """

    id: str
    params: dict = field(default_factory=dict)
    status: str = PASS
    witness: str | None = None
    tolerance: str = EXACT
    detail: dict = field(default_factory=dict)

    def ok(self) -> bool:
        return self.status in (PASS, EXPECTED_FAIL_CONFIRMED)

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "params": _jsonable(self.params),
            "status": self.status,
            "witness": self.witness,
            "tolerance": self.tolerance,
        }
        if self.detail:
            out["detail"] = _jsonable(self.detail)
        return out

"""The three-parameter family descriptor shared by every module."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RationalLike, as_rational


@dataclass(frozen=True)
class HsuShiueParams:
    """Parameter triple (alpha, beta, r) of the generalized Stirling family.

    The all-zero triple is rejected: it does not define a family.
    """

    alpha: Fraction
    beta: Fraction
    r: Fraction

    def __init__(self, alpha: RationalLike, beta: RationalLike, r: RationalLike):
        object.__setattr__(self, "alpha", as_rational(alpha))
        object.__setattr__(self, "beta", as_rational(beta))
        object.__setattr__(self, "r", as_rational(r))
        if self.alpha == 0 and self.beta == 0 and self.r == 0:
            raise ValueError("(alpha, beta, r) = (0, 0, 0) is not a valid parameter triple")

    def __repr__(self) -> str:  # compact, round-trippable
        return f"HsuShiueParams({self.alpha!s}, {self.beta!s}, {self.r!s})"

"""Triangular tables of generalized Stirling numbers S(n,k; alpha, beta, r).

Tables are built by the triangular recurrence

    S(0,0) = 1,   S(n+1,k) = S(n,k-1) + (k*beta - n*alpha + r) * S(n,k)

with S(n,k) = 0 for k > n.  The exponential generating function

    (1/k!) * [((1+alpha t)^(beta/alpha) - 1)/beta]^k * (1+alpha t)^(r/alpha)

is kept as an independent oracle (`verify_against_gf`), never as the
constructor, so the two derivations guard each other.

Named specializations return the parameter triple whose table reproduces a
classical family under this convention:

    stirling2                    (0, 1, 0)      partition numbers {n k}
    stirling1_signed             (1, 0, 0)      signed first kind s(n,k)
    howard_degenerate_weighted   (alpha, 1, r)  weighted degenerate, 2nd kind
    carlitz_degenerate           (alpha, 1, 0)  degenerate 2nd kind
    r_stirling                   (0, 1, r)      {n+r k+r}_r
    whitney                      (0, beta, 1)   Dowling-lattice W_beta(n,k)
    r_whitney                    (0, beta, r)   W_{beta,r}(n,k)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import RationalLike, as_rational
from .params import HsuShiueParams
from .report import EXACT, FAIL, PASS, CheckReport, fmt_rational
from .series import deformed_base, binom_deform, pow_int


@dataclass(frozen=True)
class StirlingTable:
    """Immutable triangle of exact S(n,k) values, 0 <= k <= n <= n_max."""

    params: HsuShiueParams
    n_max: int
    rows: tuple[tuple[Fraction, ...], ...]

    def value(self, n: int, k: int) -> Fraction:
        if n < 0 or n > self.n_max:
            raise IndexError(f"row {n} outside table range 0..{self.n_max}")
        if k < 0:
            raise IndexError(f"negative column {k}")
        if k > n:
            return Fraction(0)
        return self.rows[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.rows[n]

    def with_entry(self, n: int, k: int, value: RationalLike) -> "StirlingTable":
        """Copy with one cell replaced; a hook for negative-control tests."""
        rows = [list(r) for r in self.rows]
        rows[n][k] = as_rational(value)
        return StirlingTable(self.params, self.n_max, tuple(tuple(r) for r in rows))


def build_table(params: HsuShiueParams, n_max: int) -> StirlingTable:
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    alpha, beta, r = params.alpha, params.beta, params.r
    rows = [(Fraction(1),)]
    for n in range(n_max):
        prev = rows[n]
        nxt = []
        for k in range(n + 2):
            acc = prev[k - 1] if 1 <= k <= n + 1 else Fraction(0)
            if k <= n:
                acc += (k * beta - n * alpha + r) * prev[k]
            nxt.append(acc)
        rows.append(tuple(nxt))
    return StirlingTable(params, n_max, tuple(rows))


@lru_cache(maxsize=512)
def cached_table(params: HsuShiueParams, n_max: int) -> StirlingTable:
    """Shared read-only tables for the polynomial and identity layers."""
    return build_table(params, n_max)


SPECIAL_FAMILIES = (
    "stirling2",
    "stirling1_signed",
    "howard_degenerate_weighted",
    "carlitz_degenerate",
    "r_stirling",
    "whitney",
    "r_whitney",
)


def specialize(
    kind: str,
    *,
    alpha: RationalLike = 0,
    beta: RationalLike = 1,
    r: RationalLike = 0,
) -> HsuShiueParams:
    """Parameter triple of a named classical family (see module docstring)."""
    if kind == "stirling2":
        return HsuShiueParams(0, 1, 0)
    if kind == "stirling1_signed":
        return HsuShiueParams(1, 0, 0)
    if kind == "howard_degenerate_weighted":
        return HsuShiueParams(alpha, 1, r)
    if kind == "carlitz_degenerate":
        return HsuShiueParams(alpha, 1, 0)
    if kind == "r_stirling":
        return HsuShiueParams(0, 1, r)
    if kind == "whitney":
        return HsuShiueParams(0, beta, 1)
    if kind == "r_whitney":
        return HsuShiueParams(0, beta, r)
    raise ValueError(f"unknown family kind {kind!r}; expected one of {SPECIAL_FAMILIES}")


def verify_against_gf(table: StirlingTable, order: int) -> CheckReport:
    """Compare table entries with generating-function coefficients.

    For each k <= order, extracts n! * [t^n] of
    (1/k!) * base^k * (1+alpha t)^(r/alpha) with base the beta-normalized
    deformed exponential; exact mismatches are reported with their (n,k).
    """
    if order > table.n_max:
        raise ValueError(f"order {order} exceeds table n_max {table.n_max}")
    p = table.params
    base = deformed_base(p.alpha, p.beta, order)
    weight = binom_deform(p.alpha, p.r, order)
    rpt = CheckReport(id="GF_VS_TABLE", params={"params": p, "order": order}, tolerance=EXACT)
    for k in range(order + 1):
        gf = pow_int(base, k) * weight
        for n in range(k, order + 1):
            expected = gf.coeff(n) * factorial(n) / factorial(k)
            got = table.value(n, k)
            if got != expected:
                rpt.status = FAIL
                rpt.witness = (
                    f"(n={n}, k={k}): table {fmt_rational(got)} "
                    f"!= gf {fmt_rational(expected)}"
                )
                return rpt
    rpt.status = PASS
    return rpt

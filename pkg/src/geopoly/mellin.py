"""Formal action of the weighted derivative (beta * x^(1-alpha/beta) * D)^n.

On the graded monomial x^((k*beta + r)/beta) one application multiplies by
(k*beta + r - m*alpha) where m counts prior applications, so n applications
accumulate the generalized factorial (k*beta + r | alpha)_n and lower the
carried prefactor exponent from (r - m*alpha)/beta to (r - (m+n)*alpha)/beta.
A :class:`GradedSeries` tracks that prefactor structurally (params plus an
application counter); coefficients stay plain rationals, so nothing here
ever needs fractional powers of the series variable.

The verifiers expand both sides of the operator identities over this graded
basis: the operator route on the left, and on the right either the
derivative expansion sum_k S(n,k) beta^k x^k f^(k)(x) or a closed
generating-function composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact import RationalLike, as_rational, binomial_general, gen_factorial
from .families import geometric_poly, exp_poly
from .params import HsuShiueParams
from .polynomials import PolyQ
from .report import FAIL, CheckReport, fmt_rational
from .series import PowerSeries, binom_deform, divide, inverse, pow_int, pow_series
from .stirling import cached_table


@dataclass(frozen=True)
class GradedSeries:
    """Coefficients c_k of x^(k + (r - m*alpha)/beta) after m applications."""

    params: HsuShiueParams
    applications: int
    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k]


def embed_series(ps: PowerSeries, params: HsuShiueParams) -> GradedSeries:
    """x^(r/beta) * ps(x) as a fresh graded series."""
    if params.beta == 0:
        raise ValueError("beta must be nonzero for the graded embedding")
    return GradedSeries(params, 0, tuple(ps.coeffs))


def embed_poly(f: PolyQ, params: HsuShiueParams, order: int) -> GradedSeries:
    return embed_series(f.to_series(order), params)


def apply_operator(gs: GradedSeries, times: int) -> GradedSeries:
    """Apply the weighted derivative `times` more times."""
    if times < 0:
        raise ValueError(f"times must be >= 0, got {times}")
    a, b, r = gs.params.alpha, gs.params.beta, gs.params.r
    m = gs.applications
    coeffs = []
    for k, c in enumerate(gs.coeffs):
        factor = Fraction(1)
        for j in range(times):
            factor *= k * b + r - (m + j) * a
        coeffs.append(c * factor)
    return GradedSeries(gs.params, m + times, tuple(coeffs))


def _mismatch(lhs: tuple[Fraction, ...], rhs: tuple[Fraction, ...]) -> int | None:
    for k in range(min(len(lhs), len(rhs))):
        if lhs[k] != rhs[k]:
            return k
    return None


def verify_eq1_poly(n: int, f: PolyQ, params: HsuShiueParams) -> CheckReport:
    """Operator route vs derivative expansion for a polynomial test function.

    LHS: n applications on the embedding of f.  RHS: the graded embedding of
    sum_k S(n,k) beta^k x^k f^(k)(x) at application count n.  Polynomials are
    dense in the identities actually used downstream, so exact agreement here
    (plus linearity) is the meaningful machine-checkable slice.
    """
    order = max(f.degree, 0)
    rpt = CheckReport(id="EQ1", params={"n": n, "f": list(f.coeffs), "params": params})
    lhs = apply_operator(embed_poly(f, params, order), n)
    table = cached_table(params, n)
    rhs_poly = PolyQ.zero()
    for k in range(n + 1):
        term = f.derivative(k).shift_x(k) * (table.value(n, k) * params.beta**k)
        rhs_poly = rhs_poly + term
    rhs = rhs_poly.to_series(order).coeffs
    where = _mismatch(lhs.coeffs, rhs)
    if where is not None:
        rpt.status = FAIL
        rpt.witness = (
            f"x^{where}: operator {fmt_rational(lhs.coeffs[where])} "
            f"!= expansion {fmt_rational(rhs[where])}"
        )
    return rpt


def _binomial_tail_series(s: int, order: int) -> PowerSeries:
    # sum_k C(s+k, k) t^k = (1-t)^(-s-1), built termwise
    return PowerSeries.from_coeffs(
        [binomial_general(s + k, k) for k in range(order + 1)]
    )


def verify_series_identity(
    which: str, n: int, s: int, params: HsuShiueParams, order: int
) -> CheckReport:
    """Termwise factorial sums vs generating-function composition.

    which = "eq5":  sum_k C(s+k,k) (r+k*beta|alpha)_n x^k
                    == (1-x)^(-s-1) * w_n^(s+1)(x/(1-x))
    which = "eq21": the s = 0 slice of the above
    which = "eq38_binomial":
                    sum_k C(s,k) (r+k*beta|alpha)_n x^k
                    == (1+x)^s * w_n^(-s)(-x/(1+x))
    """
    if order < n:
        raise ValueError(f"order {order} < n {n}")
    a, b, r = params.alpha, params.beta, params.r
    rpt = CheckReport(
        id={"eq5": "EQ5", "eq21": "EQ21", "eq38_binomial": "EQ38"}[which],
        params={"n": n, "s": s, "params": params, "order": order},
    )
    t = PowerSeries.t(order)
    one = PowerSeries.one(order)
    if which in ("eq5", "eq21"):
        if which == "eq21":
            s = 0
        lhs = [
            binomial_general(s + k, k) * gen_factorial(r + k * b, a, n)
            for k in range(order + 1)
        ]
        u = divide(t, one - t)  # x/(1-x), valuation 1
        w = geometric_poly(n, s + 1, params)
        rhs = pow_int(inverse(one - t), s + 1) * w.at_series(u)
    elif which == "eq38_binomial":
        lhs = [
            binomial_general(s, k) * gen_factorial(r + k * b, a, n)
            for k in range(order + 1)
        ]
        v = divide(-t, one + t)  # -x/(1+x)
        w = geometric_poly(n, -s, params)
        rhs = pow_int(one + t, s) * w.at_series(v)
    else:
        raise ValueError(f"unknown identity {which!r}")
    where = _mismatch(tuple(lhs), rhs.coeffs)
    if where is not None:
        rpt.status = FAIL
        rpt.witness = (
            f"[x^{where}]: termwise {fmt_rational(lhs[where])} "
            f"!= composition {fmt_rational(rhs.coeffs[where])}"
        )
    return rpt


def verify_eq4_operator(n: int, s: int, params: HsuShiueParams, order: int) -> CheckReport:
    """Operator route for the binomial-tail test function.

    Applies the operator n times to the embedding of sum_k C(s+k,k) x^k and
    compares with the composition form (1-x)^(-s-1) * w_n^(s+1)(x/(1-x)).
    Distinct from `verify_series_identity("eq5", ...)`, whose left side is
    assembled termwise from generalized factorials instead.
    """
    rpt = CheckReport(
        id="EQ4_OPERATOR", params={"n": n, "s": s, "params": params, "order": order}
    )
    lhs = apply_operator(embed_series(_binomial_tail_series(s, order), params), n)
    t = PowerSeries.t(order)
    one = PowerSeries.one(order)
    u = divide(t, one - t)
    rhs = pow_int(inverse(one - t), s + 1) * geometric_poly(n, s + 1, params).at_series(u)
    where = _mismatch(lhs.coeffs, rhs.coeffs)
    if where is not None:
        rpt.status = FAIL
        rpt.witness = (
            f"[x^{where}]: operator {fmt_rational(lhs.coeffs[where])} "
            f"!= composition {fmt_rational(rhs.coeffs[where])}"
        )
    return rpt


def verify_eq15(n: int, params: HsuShiueParams, order: int) -> CheckReport:
    """Operator action on the scaled exponential vs its polynomial closed form.

    n applications on x^(r/beta) e^(x/beta) must reproduce, gradedwise, the
    convolution e^(x/beta) * S_n(x); coefficientwise this is the same content
    as the exact Dobinski-style expansion, routed through the operator.
    """
    if params.beta == 0:
        raise ValueError("beta must be nonzero")
    rpt = CheckReport(id="EQ15", params={"n": n, "params": params, "order": order})
    exp_over_beta = binom_deform(0, 1 / params.beta, order)
    lhs = apply_operator(embed_series(exp_over_beta, params), n)
    rhs = exp_over_beta * exp_poly(n, params).to_series(order)
    where = _mismatch(lhs.coeffs, rhs.coeffs)
    if where is not None:
        rpt.status = FAIL
        rpt.witness = (
            f"[x^{where}]: operator {fmt_rational(lhs.coeffs[where])} "
            f"!= convolution {fmt_rational(rhs.coeffs[where])}"
        )
    return rpt

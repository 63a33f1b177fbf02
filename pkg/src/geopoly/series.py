"""Truncated formal power series over exact rationals.

A :class:`PowerSeries` stores the coefficients of t^0..t^order as a tuple of
Fractions.  Ring operations are exact and truncate to the minimum operand
order; division shifts out the common t-valuation first, so quotients of
valuation-1 series (log/exp-type numerators and denominators) stay exact.

The deformed exponential base used by every generating function here is

    (1 + alpha*t)^(c/alpha)  =  sum_j  (c|alpha)_j * t^j / j!

whose right-hand side is an exact rational expression that remains valid at
alpha = 0, where it degenerates to exp(c*t).  All alpha -> 0 "limits" in
this module are therefore the same code path, never a numeric limit.
Similarly ((1+alpha*t)^(beta/alpha) - 1)/beta has j-th coefficient
prod_{i=1}^{j-1}(beta - i*alpha) / j!, exact even at beta = 0 (where it
becomes log(1+alpha*t)/alpha).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

from .exact import RationalLike, as_rational, gen_factorial
from .params import HsuShiueParams

ScalarLike = Union[Fraction, int]


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of t^0 .. t^order, exact rationals."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a PowerSeries needs at least the t^0 coefficient")

    @staticmethod
    def from_coeffs(coeffs: Iterable[RationalLike], order: int | None = None) -> "PowerSeries":
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            cs = cs[: order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        return PowerSeries(tuple(cs))

    @staticmethod
    def constant(c: RationalLike, order: int) -> "PowerSeries":
        return PowerSeries.from_coeffs([as_rational(c)], order)

    @staticmethod
    def zero(order: int) -> "PowerSeries":
        return PowerSeries.constant(0, order)

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries.constant(1, order)

    @staticmethod
    def t(order: int) -> "PowerSeries":
        return PowerSeries.from_coeffs([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        """[t^j], an error beyond the truncation order."""
        if j < 0 or j > self.order:
            raise IndexError(f"coefficient t^{j} outside truncation order {self.order}")
        return self.coeffs[j]

    def egf_coeff(self, n: int) -> Fraction:
        """n! * [t^n] -- the n-th value of the family this series generates."""
        return self.coeff(n) * factorial(n)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        return None

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "PowerSeries | ScalarLike") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            cs = list(self.coeffs)
            cs[0] += as_rational(other)
            return PowerSeries(tuple(cs))
        n = min(self.order, other.order)
        return PowerSeries(tuple(self.coeffs[j] + other.coeffs[j] for j in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PowerSeries | ScalarLike") -> "PowerSeries":
        return self + (-other if isinstance(other, PowerSeries) else -as_rational(other))

    def __rsub__(self, other: ScalarLike) -> "PowerSeries":
        return (-self) + as_rational(other)

    def __mul__(self, other: "PowerSeries | ScalarLike") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            c = as_rational(other)
            return PowerSeries(tuple(c * a for a in self.coeffs))
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(tuple(out))

    __rmul__ = __mul__


def divide(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Exact quotient a/b after shifting out b's t-valuation from both.

    Requires valuation(b) <= valuation(a); the result order is the shared
    order minus the shifted valuation.
    """
    vb = b.valuation()
    if vb is None:
        raise ZeroDivisionError("power series division by the zero series")
    va = a.valuation()
    if va is not None and va < vb:
        raise ValueError(f"valuation(a)={va} < valuation(b)={vb}: quotient is not a power series")
    order = min(a.order, b.order) - vb
    if order < 0:
        raise ValueError("truncation order too small to divide after valuation shift")
    an = a.coeffs[vb : vb + order + 1]
    bn = b.coeffs[vb : vb + order + 1]
    inv0 = 1 / bn[0]
    out: list[Fraction] = []
    for n in range(order + 1):
        acc = an[n] if n < len(an) else Fraction(0)
        for i in range(n):
            acc -= out[i] * bn[n - i]
        out.append(acc * inv0)
    return PowerSeries(tuple(out))


def inverse(b: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    if b.coeffs[0] == 0:
        raise ValueError("cannot invert a series with zero constant term")
    return divide(PowerSeries.one(b.order), b)


def pow_int(a: PowerSeries, n: int) -> PowerSeries:
    """a**n for integer n (negative n inverts first)."""
    if n < 0:
        return pow_int(inverse(a), -n)
    out = PowerSeries.one(a.order)
    base = a
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


def exp_series(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series with zero constant term."""
    if a.coeffs[0] != 0:
        raise ValueError("exp_series requires valuation >= 1 (zero constant term)")
    out = [Fraction(1)] + [Fraction(0)] * a.order
    for n in range(1, a.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if a.coeffs[k]:
                acc += k * a.coeffs[k] * out[n - k]
        out[n] = acc / n
    return PowerSeries(tuple(out))


def log_series(a: PowerSeries) -> PowerSeries:
    """log(a) for a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("log_series requires constant term 1")
    out = [Fraction(0)] * (a.order + 1)
    for n in range(1, a.order + 1):
        acc = n * a.coeffs[n]
        for k in range(1, n):
            acc -= k * out[k] * a.coeffs[n - k]
        out[n] = acc / n
    return PowerSeries(tuple(out))


def pow_series(a: PowerSeries, c: RationalLike) -> PowerSeries:
    """a**c for rational c, via exp(c * log a); needs constant term 1."""
    return exp_series(log_series(a) * as_rational(c))


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(t)); inner must have zero constant term."""
    if inner.coeffs[0] != 0:
        raise ValueError("compose requires the inner series to have zero constant term")
    out = PowerSeries.constant(outer.coeffs[-1], inner.order)
    for j in range(outer.order - 1, -1, -1):
        out = out * inner + outer.coeffs[j]
    return out


# ---------------------------------------------------------------------------
# Deformed exponential building blocks
# ---------------------------------------------------------------------------


def binom_deform(alpha: RationalLike, c: RationalLike, order: int) -> PowerSeries:
    """(1 + alpha*t)^(c/alpha), exactly exp(c*t) at alpha = 0.

    Coefficient of t^j is (c|alpha)_j / j!.
    """
    alpha = as_rational(alpha)
    c = as_rational(c)
    coeffs = [Fraction(1)]
    acc = Fraction(1)
    for j in range(1, order + 1):
        acc *= c - (j - 1) * alpha
        coeffs.append(acc / factorial(j))
    return PowerSeries(tuple(coeffs))


def deformed_base(alpha: RationalLike, beta: RationalLike, order: int) -> PowerSeries:
    """((1 + alpha*t)^(beta/alpha) - 1)/beta without ever dividing by beta.

    Coefficient of t^j (j >= 1) is prod_{i=1}^{j-1}(beta - i*alpha) / j!,
    so beta = 0 degenerates exactly to log(1 + alpha*t)/alpha and alpha = 0
    to (exp(beta*t) - 1)/beta.
    """
    alpha = as_rational(alpha)
    beta = as_rational(beta)
    coeffs = [Fraction(0)]
    acc = Fraction(1)
    for j in range(1, order + 1):
        coeffs.append(acc / factorial(j))
        acc *= beta - j * alpha
    return PowerSeries(tuple(coeffs))


# ---------------------------------------------------------------------------
# Generating functions of the polynomial families
# ---------------------------------------------------------------------------


def gf_w(params: HsuShiueParams, s: int, x: RationalLike, order: int) -> PowerSeries:
    """EGF of the order-s generalized geometric polynomials at argument x.

    [1/(1 - x*((1+alpha t)^(beta/alpha) - 1))]^s * (1+alpha t)^(r/alpha);
    n! * [t^n] is w_n^(s)(x; alpha, beta, r).
    """
    if s < 1:
        raise ValueError(f"series order s must be >= 1, got {s}")
    x = as_rational(x)
    big = binom_deform(params.alpha, params.beta, order)
    den = PowerSeries.one(order) - (big - 1) * x
    core = pow_int(inverse(den), s)
    return core * binom_deform(params.alpha, params.r, order)


def gf_degenerate_euler(s: int, alpha: RationalLike, x: RationalLike, order: int) -> PowerSeries:
    """EGF (2/((1+alpha t)^(1/alpha)+1))^s * (1+alpha t)^(x/alpha).

    n! * [t^n] is the order-s degenerate Euler polynomial at x; alpha = 0
    gives the classical (2/(e^t+1))^s e^{xt}.
    """
    if s < 0:
        raise ValueError(f"order s must be >= 0, got {s}")
    u = binom_deform(alpha, 1, order)
    half = (u + 1) * Fraction(1, 2)  # constant term 1
    core = pow_int(inverse(half), s)
    return core * binom_deform(alpha, x, order)


def gf_bernoulli2_degenerate(alpha: RationalLike, x: RationalLike, order: int) -> PowerSeries:
    """EGF of the degenerate Bernoulli polynomials of the second kind.

    [(1/alpha) log(1+alpha t)] / [(1+alpha t)^(1/alpha) - 1] * (1+alpha t)^(x/alpha);
    numerator and denominator both have valuation 1, which `divide` shifts
    out.  alpha = 0 collapses to the classical t e^{xt} / (e^t - 1).
    """
    num = deformed_base(alpha, 0, order + 1)  # log(1+alpha t)/alpha, exact at alpha=0 too
    den = binom_deform(alpha, 1, order + 1) - 1
    return divide(num, den) * binom_deform(alpha, x, order)


def gf_carlitz_beta(alpha: RationalLike, x: RationalLike, order: int) -> PowerSeries:
    """EGF t/((1+alpha t)^(1/alpha) - 1) * (1+alpha t)^(x/alpha).

    n! * [t^n] is the degenerate Bernoulli polynomial beta_n(alpha, x); the
    alpha = 0 path is the classical Bernoulli EGF.
    """
    num = PowerSeries.t(order + 1)
    den = binom_deform(alpha, 1, order + 1) - 1
    return divide(num, den) * binom_deform(alpha, x, order)

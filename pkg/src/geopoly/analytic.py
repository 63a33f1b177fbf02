"""High-precision evaluation of zeta-weighted series against closed forms.

Float layer
-----------
Values live in :class:`decimal.Decimal` under an explicit per-configuration
context: :class:`EvalConfig` fixes ``precision_bits`` and every routine runs
at ``ceil(bits*log10(2)) + 15`` decimal digits, so ambient rounding noise
sits far below the pass threshold 2^(32 - bits).  Rationals convert exactly;
only the final divisions round.

Special functions
-----------------
zeta(s) and the Hurwitz zeta(s, a) (integer s >= 2, rational a > 0) use the
Euler-Maclaurin expansion

    sum_{j<N} (a+j)^-s + (a+N)^(1-s)/(s-1) + (a+N)^-s/2
        + sum_m B_2m/(2m)! <s>_{2m-1} (a+N)^(-s-2m+1)

whose integrand x -> (a+x)^-s is completely monotone for real s > 0, so the
remainder after the m-th correction is bounded by the first omitted term
(classical envelope property).  The expansion is cut only once that bound
falls below the configured tolerance; if the terms bottom out first, N is
doubled and the evaluation restarts.  digamma uses upward recurrence to a
large argument followed by the asymptotic series with the same envelope
bound; the Euler constant is -digamma(1), pi comes from a Machin arctangent
pair (alternating series, tail bounded by the first omitted term), and log 2
from the correctly rounded stdlib ln.

Series verdicts
---------------
Each eval_* routine sums the infinite side with an explicit geometric-ratio
majorant (rational arithmetic; zeta(2) <= 2 and (2*pi)^2 <= 40 style
bounds), truncating only when majorant/(1-ratio) is below tolerance, then
assembles the closed-form side and reports |LHS - RHS| against the
threshold.  No "looks converged" cutoffs anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import ceil, factorial
from threading import Lock

from .exact import RationalLike, as_rational, gen_factorial
from .families import bernoulli_numbers, exp_poly
from .params import HsuShiueParams
from .report import FAIL, PASS, CheckReport
from .stirling import cached_table


@dataclass(frozen=True)
class EvalConfig:
    """Precision contract for the numeric layer.

    tail_tolerance defaults to 2^(32 - precision_bits); max_terms bounds
    every series loop (exceeding it is an error, never a silent truncation).
    """

    precision_bits: int = 256
    tail_tolerance: Fraction | None = None
    max_terms: int = 10000

    def __post_init__(self) -> None:
        if self.precision_bits < 64:
            raise ValueError("precision_bits must be >= 64")

    @property
    def tolerance(self) -> Fraction:
        if self.tail_tolerance is not None:
            return as_rational(self.tail_tolerance)
        return Fraction(1, 2 ** (self.precision_bits - 32))

    @property
    def digits(self) -> int:
        return ceil(self.precision_bits * 0.30103) + 15

    def tolerance_label(self) -> str:
        if self.tail_tolerance is not None:
            return str(self.tail_tolerance)
        return f"2^-{self.precision_bits - 32}"


def to_decimal(x: RationalLike, cfg: EvalConfig) -> Decimal:
    x = as_rational(x)
    with localcontext() as ctx:
        ctx.prec = cfg.digits
        return Decimal(x.numerator) / Decimal(x.denominator)


_CACHE_LOCK = Lock()
_ZETA_CACHE: dict[tuple[int, Fraction, int], Decimal] = {}
_CONST_CACHE: dict[tuple[str, int], Decimal] = {}


def _asymptotic_cut(digits: int) -> int:
    # exp(-2*pi*N) must undercut 10^-digits; 0.45*digits leaves ~25% slack
    return max(24, ceil(0.45 * digits))


def _bernoulli(idx: int) -> Fraction:
    chunk = 64
    while idx >= chunk:
        chunk *= 2
    return bernoulli_numbers(chunk)[idx]


def hurwitz_zeta(s: int, a: RationalLike, cfg: EvalConfig) -> Decimal:
    """Hurwitz zeta(s, a) = sum_{j>=0} (j+a)^-s for integer s >= 2, a > 0."""
    if s < 2:
        raise ValueError(f"s must be an integer >= 2, got {s}")
    a = as_rational(a)
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    key = (s, a, cfg.digits)
    with _CACHE_LOCK:
        hit = _ZETA_CACHE.get(key)
    if hit is not None:
        return hit

    target = Fraction(1, 10 ** (cfg.digits - 5))
    n_cut = _asymptotic_cut(cfg.digits)
    with localcontext() as ctx:
        ctx.prec = cfg.digits + 10
        for _attempt in range(6):
            head = Decimal(0)
            for j in range(n_cut):
                q = a + j
                head += Decimal(q.denominator) ** s / Decimal(q.numerator) ** s
            edge = a + n_cut
            edge_dec = Decimal(edge.numerator) / Decimal(edge.denominator)
            inv = 1 / edge_dec
            inv2 = inv * inv
            total = head + edge_dec * inv**s / (s - 1) + inv**s / 2
            # correction terms B_2m/(2m)! * <s>_{2m-1} * edge^(1-s-2m)
            power = inv**s * inv  # edge^(-s-1)
            rising = Fraction(s)  # <s>_{2m-1} at m=1
            m = 1
            prev_bound = None
            while True:
                coeff = _bernoulli(2 * m) / factorial(2 * m) * rising
                term = Decimal(coeff.numerator) / Decimal(coeff.denominator) * power
                total += term
                # envelope bound: remainder <= first omitted term
                rising_next = rising * (s + 2 * m - 1) * (s + 2 * m)
                coeff_next = abs(_bernoulli(2 * m + 2)) / factorial(2 * m + 2) * rising_next
                bound = (
                    coeff_next
                    / edge ** (s + 2 * m + 1)
                )
                if bound < target:
                    break
                if prev_bound is not None and bound >= prev_bound:
                    break  # divergent zone reached before target: enlarge N
                prev_bound = bound
                rising = rising_next
                power *= inv2
                m += 1
                if m > cfg.max_terms:
                    raise ArithmeticError("Euler-Maclaurin failed to converge")
            if bound < target:
                break
            n_cut *= 2
        else:
            raise ArithmeticError("Euler-Maclaurin cutoff grew without reaching tolerance")
    with localcontext() as ctx:
        ctx.prec = cfg.digits
        out = +total
    with _CACHE_LOCK:
        _ZETA_CACHE[key] = out
    return out


def zeta_int(s: int, cfg: EvalConfig) -> Decimal:
    """Riemann zeta at integer s >= 2."""
    return hurwitz_zeta(s, Fraction(1), cfg)


def digamma(a: RationalLike, cfg: EvalConfig) -> Decimal:
    """psi(a) for rational a > 0: recurrence up, then asymptotic series."""
    a = as_rational(a)
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    cut = _asymptotic_cut(cfg.digits)
    shift = max(0, ceil(cut - a))
    x = a + shift
    target = Fraction(1, 10 ** (cfg.digits - 5))
    with localcontext() as ctx:
        ctx.prec = cfg.digits + 10
        rec = Decimal(0)
        for j in range(shift):
            q = a + j
            rec += Decimal(q.denominator) / Decimal(q.numerator)
        x_dec = Decimal(x.numerator) / Decimal(x.denominator)
        inv = 1 / x_dec
        inv2 = inv * inv
        total = x_dec.ln() - inv / 2
        power = inv2
        m = 1
        while True:
            c = _bernoulli(2 * m) / (2 * m)
            total -= Decimal(c.numerator) / Decimal(c.denominator) * power
            bound = abs(_bernoulli(2 * m + 2)) / (2 * m + 2) / x ** (2 * m + 2)
            if bound < target:
                break
            power *= inv2
            m += 1
            if m > cfg.max_terms:
                raise ArithmeticError("digamma asymptotic series failed to converge")
        total -= rec
    with localcontext() as ctx:
        ctx.prec = cfg.digits
        return +total


def gamma_euler(cfg: EvalConfig) -> Decimal:
    """Euler's constant, as -psi(1); independent of the zeta machinery."""
    key = ("gamma", cfg.digits)
    with _CACHE_LOCK:
        hit = _CONST_CACHE.get(key)
    if hit is not None:
        return hit
    with localcontext() as ctx:
        ctx.prec = cfg.digits
        out = -digamma(Fraction(1), cfg)
    with _CACHE_LOCK:
        _CONST_CACHE[key] = out
    return out


def _arctan_inv(m: int, digits: int) -> Decimal:
    # atan(1/m) by its alternating series; remainder <= first omitted term
    with localcontext() as ctx:
        ctx.prec = digits + 10
        inv = 1 / Decimal(m)
        inv2 = inv * inv
        total = Decimal(0)
        power = inv
        k = 0
        floor = Decimal(10) ** -(digits + 5)
        while True:
            term = power / (2 * k + 1)
            total += term if k % 2 == 0 else -term
            power *= inv2
            k += 1
            if power / (2 * k + 1) < floor:
                break
        return total


def pi(cfg: EvalConfig) -> Decimal:
    """pi = 16 atan(1/5) - 4 atan(1/239) (Machin)."""
    key = ("pi", cfg.digits)
    with _CACHE_LOCK:
        hit = _CONST_CACHE.get(key)
    if hit is not None:
        return hit
    with localcontext() as ctx:
        ctx.prec = cfg.digits + 10
        val = 16 * _arctan_inv(5, cfg.digits) - 4 * _arctan_inv(239, cfg.digits)
    with localcontext() as ctx:
        ctx.prec = cfg.digits
        out = +val
    with _CACHE_LOCK:
        _CONST_CACHE[key] = out
    return out


def log2(cfg: EvalConfig) -> Decimal:
    key = ("log2", cfg.digits)
    with _CACHE_LOCK:
        hit = _CONST_CACHE.get(key)
    if hit is not None:
        return hit
    with localcontext() as ctx:
        ctx.prec = cfg.digits
        out = Decimal(2).ln()
    with _CACHE_LOCK:
        _CONST_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# Series-vs-closed-form verdicts
# ---------------------------------------------------------------------------


def _report(rid: str, params: dict, lhs: Decimal, rhs: Decimal, cfg: EvalConfig) -> CheckReport:
    with localcontext() as ctx:
        ctx.prec = cfg.digits
        diff = abs(lhs - rhs)
        lhs, rhs = +lhs, +rhs
    tol = to_decimal(cfg.tolerance, cfg)
    status = PASS if diff < tol else FAIL
    return CheckReport(
        id=rid,
        params=params,
        status=status,
        witness=f"|lhs-rhs| = {diff:.6E}",
        tolerance=cfg.tolerance_label(),
        detail={
            "lhs": str(lhs),
            "rhs": str(rhs),
            "abs_diff": f"{diff:.6E}",
            "precision_digits": cfg.digits,
        },
    )


def _poly_bound_base(params: HsuShiueParams, n: int) -> tuple[Fraction, Fraction]:
    # |(r + k*beta | alpha)_n| <= (a + b*k)^n with a, b as below
    a = abs(params.r) + n * abs(params.alpha)
    b = abs(params.beta)
    return a, b


def eval_theorem5(
    params: HsuShiueParams, n: int, x: RationalLike, cfg: EvalConfig | None = None
) -> CheckReport:
    """zeta-coefficient power series vs its digamma/Hurwitz closed form.

    sum_{k>=1} zeta(k+1) (r+k*beta|alpha)_n x^k against
    -(r|alpha)_n (psi(1-x) + gamma)
        + sum_{k=1..n} S(n,k) k! zeta(k+1, 1-x) (beta x)^k,  |x| < 1.
    """
    cfg = cfg or EvalConfig()
    x = as_rational(x)
    if not -1 < x < 1:
        raise ValueError(f"need |x| < 1, got {x}")
    a, b = _poly_bound_base(params, n)
    ax = abs(x)
    tol = cfg.tolerance
    lhs = Decimal(0)
    with localcontext() as ctx:
        ctx.prec = cfg.digits + 10
        k = 0
        xpow = Fraction(1)
        while True:
            k += 1
            if k > cfg.max_terms:
                raise ArithmeticError("tail bound not reached within max_terms")
            xpow *= x
            coeff = gen_factorial(params.r + k * params.beta, params.alpha, n) * xpow
            if coeff:
                lhs += zeta_int(k + 1, cfg) * Decimal(coeff.numerator) / Decimal(
                    coeff.denominator
                )
            # geometric majorant for the tail beyond k
            bound_next = 2 * (a + b * (k + 1)) ** n * ax ** (k + 1)
            if bound_next == 0:
                break
            ratio = ax if n == 0 else ax * ((a + b * (k + 2)) / (a + b * (k + 1))) ** n
            if ratio < 1 and bound_next / (1 - ratio) < tol / 4:
                break
        rhs = Decimal(0)
        head = gen_factorial(params.r, params.alpha, n)
        if head:
            psi_val = digamma(1 - x, cfg) + gamma_euler(cfg)
            rhs -= Decimal(head.numerator) / Decimal(head.denominator) * psi_val
        table = cached_table(params, n)
        bx = params.beta * x
        for k in range(1, n + 1):
            c = table.value(n, k) * factorial(k) * bx**k
            if c:
                rhs += Decimal(c.numerator) / Decimal(c.denominator) * hurwitz_zeta(
                    k + 1, 1 - x, cfg
                )
    return _report(
        "EQ26",
        {"params": params, "n": n, "x": x, "bits": cfg.precision_bits},
        lhs,
        rhs,
        cfg,
    )


def eval_eq30_family(n: int, cfg: EvalConfig | None = None) -> CheckReport:
    """sum_{k>=2} zeta(k) k^n / 2^k vs its log2 + weighted-zeta closed form."""
    cfg = cfg or EvalConfig()
    tol = cfg.tolerance
    with localcontext() as ctx:
        ctx.prec = cfg.digits + 10
        lhs = Decimal(0)
        k = 1
        while True:
            k += 1
            if k > cfg.max_terms:
                raise ArithmeticError("tail bound not reached within max_terms")
            coeff = Fraction(k**n, 2**k)
            lhs += zeta_int(k, cfg) * Decimal(coeff.numerator) / Decimal(coeff.denominator)
            bound_next = 2 * Fraction((k + 1) ** n, 2 ** (k + 1))
            ratio = Fraction((k + 2) ** n, 2 * (k + 1) ** n)
            if ratio < 1 and bound_next / (1 - ratio) < tol / 4:
                break
        rhs = log2(cfg)
        table = cached_table(HsuShiueParams(0, 1, 0), n + 1)
        for k in range(1, n + 1):
            c = table.value(n + 1, k + 1) * factorial(k) * (1 - Fraction(1, 2 ** (k + 1)))
            rhs += Decimal(c.numerator) / Decimal(c.denominator) * zeta_int(k + 1, cfg)
    return _report("EQ30_FAMILY", {"n": n, "bits": cfg.precision_bits}, lhs, rhs, cfg)


def eval_eq17_18(
    n: int,
    params: HsuShiueParams,
    cfg: EvalConfig | None = None,
    eq: int = 17,
    start_index: str = "derived_j0",
) -> CheckReport:
    """Trigonometric-type factorial series vs the finite Stirling sum.

    eq=17: sum_k (2k*beta+r|alpha)_n (-1)^k (2pi)^2k / (2k)!
           == sum_j S(n,2j) (-1)^j (2pi*beta)^2j
    eq=18: sum_k ((2k+1)*beta+r|alpha)_n (-1)^k (2pi)^2k / (2k+1)!
           == beta * sum_j S(n,2j+1) (-1)^j (2pi*beta)^2j
    start_index="derived_j0" starts the finite sum at j=0 (the form that
    matches the series); "paper_j1" starts at j=1 and is kept as a must-fail
    regression (already wrong at n=1).
    """
    cfg = cfg or EvalConfig()
    if eq not in (17, 18):
        raise ValueError(f"eq must be 17 or 18, got {eq}")
    if start_index not in ("derived_j0", "paper_j1"):
        raise ValueError(f"unknown start_index {start_index!r}")
    a0, b = _poly_bound_base(params, n)
    a = a0 if eq == 17 else a0 + abs(params.beta)
    tol = cfg.tolerance
    with localcontext() as ctx:
        ctx.prec = cfg.digits + 10
        two_pi_sq = 4 * pi(cfg) ** 2
        lhs = Decimal(0)
        pi_pow = Decimal(1)  # (2pi)^(2k)
        k = -1
        while True:
            k += 1
            if k > cfg.max_terms:
                raise ArithmeticError("tail bound not reached within max_terms")
            arg = (2 * k) * params.beta if eq == 17 else (2 * k + 1) * params.beta
            den = factorial(2 * k) if eq == 17 else factorial(2 * k + 1)
            coeff = gen_factorial(arg + params.r, params.alpha, n) * Fraction(
                (-1) ** k, den
            )
            if coeff:
                lhs += Decimal(coeff.numerator) / Decimal(coeff.denominator) * pi_pow
            pi_pow *= two_pi_sq
            # majorant: (2pi)^2 <= 40, shared (2k)! denominator floor
            bound_next = Fraction(40 ** (k + 1), factorial(2 * k + 2)) * (
                a + 2 * b * (k + 1)
            ) ** n
            if bound_next == 0:
                break
            poly_ratio = (
                Fraction(1)
                if n == 0
                else ((a + 2 * b * (k + 2)) / (a + 2 * b * (k + 1))) ** n
            )
            ratio = Fraction(40, (2 * k + 3) * (2 * k + 4)) * poly_ratio
            if ratio < 1 and bound_next / (1 - ratio) < tol / 4:
                break
        table = cached_table(params, n)
        beta_sq = params.beta**2
        j0 = 0 if start_index == "derived_j0" else 1
        rhs = Decimal(0)
        for j in range(j0, n // 2 + 1):
            idx = 2 * j if eq == 17 else 2 * j + 1
            c = table.value(n, idx) * (-1) ** j * beta_sq**j
            if c:
                rhs += Decimal(c.numerator) / Decimal(c.denominator) * two_pi_sq**j
        if eq == 18:
            rhs *= to_decimal(params.beta, cfg)
    return _report(
        f"EQ{eq}",
        {
            "n": n,
            "params": params,
            "start_index": start_index,
            "bits": cfg.precision_bits,
        },
        lhs,
        rhs,
        cfg,
    )


def eval_dobinski_numeric(
    n: int, params: HsuShiueParams, x: RationalLike, cfg: EvalConfig | None = None
) -> CheckReport:
    """Factorially damped expansion vs e^(x/beta) * S_n(x), for beta > 0."""
    cfg = cfg or EvalConfig()
    x = as_rational(x)
    if params.beta <= 0:
        raise ValueError("numeric check restricted to beta > 0")
    a, b = _poly_bound_base(params, n)
    q = abs(x / params.beta)
    tol = cfg.tolerance
    with localcontext() as ctx:
        ctx.prec = cfg.digits + 10
        lhs = Decimal(0)
        k = -1
        while True:
            k += 1
            if k > cfg.max_terms:
                raise ArithmeticError("tail bound not reached within max_terms")
            coeff = gen_factorial(k * params.beta + params.r, params.alpha, n) * x**k / (
                params.beta**k * factorial(k)
            )
            if coeff:
                lhs += Decimal(coeff.numerator) / Decimal(coeff.denominator)
            bound_next = (a + b * (k + 1)) ** n * q ** (k + 1) / factorial(k + 1)
            if bound_next == 0:
                break
            poly_ratio = (
                Fraction(1) if n == 0 else ((a + b * (k + 2)) / (a + b * (k + 1))) ** n
            )
            ratio = q / (k + 2) * poly_ratio
            if ratio < 1 and bound_next / (1 - ratio) < tol / 4:
                break
        exponent = to_decimal(x / params.beta, cfg)
        value = exp_poly(n, params)(x)
        rhs = exponent.exp() * (Decimal(value.numerator) / Decimal(value.denominator))
    return _report(
        "EQ16_NUMERIC",
        {"n": n, "params": params, "x": x, "bits": cfg.precision_bits},
        lhs,
        rhs,
        cfg,
    )

"""Registry of every checkable identity, keyed by stable ids.

`run(id, seed, samples)` draws parameters from a deterministic sampler over
small rationals (|numerator| <= 6, denominator <= 4; degenerate draws are
rejected and redrawn) and dispatches to the verifying routine; identical
(id, seed, samples) yield byte-identical reports.  The two *_PRINTED ids
are first-class expected-fail regressions: they run superseded closed forms
on fixed witnesses, and their reports read ``expected_fail_confirmed`` when
the forms fail as they should.  Changing the seed may change witnesses and
parameters but never the pass/fail partition, because every registered
identity is universally quantified over its sampled domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import analytic, families, mellin
from .analytic import EvalConfig
from .enumeration import barred_preferential_count, ordered_set_partitions_count
from .exact import falling_factorial, rising_factorial
from .params import HsuShiueParams
from .polynomials import PolyQ
from .report import (
    EXPECTED_FAIL_CONFIRMED,
    FAIL,
    PASS,
    CheckReport,
    fmt_rational,
)
from .stirling import build_table, verify_against_gf

IDENTITY_IDS: tuple[str, ...] = (
    "EQ1",
    "EQ3_VS_GF8",
    "EQ4_OPERATOR",
    "EQ5",
    "EQ7_GAMMA",
    "EQ10",
    "EQ14",
    "EQ15",
    "EQ16_EXACT",
    "EQ16_NUMERIC",
    "EQ17",
    "EQ18",
    "EQ19",
    "EQ21",
    "EQ26",
    "EQ27",
    "EQ29",
    "EQ30_FAMILY",
    "EQ31",
    "EQ32",
    "EQ33",
    "EQ34_THM2",
    "EQ36",
    "EQ37_CORRECTED",
    "EQ37_PRINTED",
    "EQ38",
    "COR2",
    "COR4",
    "COR5_CORRECTED",
    "COR5_PRINTED",
    "SPIVEY",
    "MINUS_ONE",
    "BPA_NUMBERS",
    "FUBINI",
    "GF_VS_TABLE",
)

EXPECTED_FAIL_IDS = frozenset({"EQ37_PRINTED", "COR5_PRINTED"})

DESCRIPTIONS: dict[str, str] = {
    "EQ1": "weighted-derivative operator vs Stirling derivative expansion on polynomials",
    "EQ3_VS_GF8": "explicit rising-factorial sum vs EGF coefficients, order s",
    "EQ4_OPERATOR": "operator route on the binomial tail vs EGF composition",
    "EQ5": "binomial-weighted factorial series vs (1-x)^-(s+1)-composed polynomial",
    "EQ7_GAMMA": "gamma-moment form (discharged to rising factorials) vs EGF",
    "EQ10": "degenerate Euler closed form vs its generating function, order s",
    "EQ14": "Bernoulli numbers / Euler values as signed partition-number sums",
    "EQ15": "operator action on the scaled exponential vs convolution closed form",
    "EQ16_EXACT": "exponential-weighted expansion, exact coefficientwise",
    "EQ16_NUMERIC": "exponential-weighted expansion, numeric partial sums (beta > 0)",
    "EQ17": "even-index cosine-type factorial series vs finite Stirling sum",
    "EQ18": "odd-index sine-type factorial series vs finite Stirling sum",
    "EQ19": "first-order geometric polynomials: explicit formula vs EGF",
    "EQ21": "unweighted factorial series vs 1/(1-x)-composed polynomial",
    "EQ26": "zeta-coefficient series vs digamma/Hurwitz closed form",
    "EQ27": "degenerate Euler closed form vs generating function, first order",
    "EQ29": "Carlitz-polynomial difference vs weighted Stirling sum",
    "EQ30_FAMILY": "zeta(k) k^n / 2^k family vs log2 + weighted zeta closed form",
    "EQ31": "shifted Carlitz value vs rising-factorial weighted Stirling sum",
    "EQ32": "EQ31 specialized to r = 0",
    "EQ33": "EQ31 specialized to r = alpha (degenerate Bernoulli numbers)",
    "EQ34_THM2": "second-kind degenerate Bernoulli closed form vs EGF",
    "EQ36": "rising factorial reflection <-x>_n = (-1)^n (x)_n",
    "EQ37_CORRECTED": "Bernoulli values at rationals, corrected beta^(n-k) weight",
    "EQ37_PRINTED": "superseded beta^(n+1-k) variant (expected fail)",
    "EQ38": "finite binomial factorial sum vs (1+x)^s-composed negative order",
    "COR2": "sums of generalized falling factorials vs weighted Stirling sum",
    "COR4": "Bernoulli polynomials at integers via r-separated partition numbers",
    "COR5_CORRECTED": "power sums via r-Whitney closed form, beta^k weight",
    "COR5_PRINTED": "superseded beta^(k-1) variant (expected fail)",
    "SPIVEY": "two-index recurrence vs direct polynomial construction",
    "MINUS_ONE": "evaluation at -1 vs generalized-factorial collapse",
    "BPA_NUMBERS": "barred-arrangement counts vs exhaustive enumeration",
    "FUBINI": "ordered-set-partition counts vs exhaustive enumeration",
    "GF_VS_TABLE": "recurrence tables vs generating-function coefficients",
}


class SmallRationalSampler:
    """64-bit LCG over small rationals; stable across platforms and versions."""

    _MULT = 6364136223846793005
    _INC = 1442695040888963407
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = (seed ^ 0x9E3779B97F4A7C15) & self._MASK
        for _ in range(4):  # scramble low-entropy seeds
            self._next()

    def _next(self) -> int:
        self._state = (self._state * self._MULT + self._INC) & self._MASK
        return self._state >> 33

    def int_between(self, lo: int, hi: int) -> int:
        return lo + self._next() % (hi - lo + 1)

    def rational(self, nonzero: bool = False, max_num: int = 6, max_den: int = 4) -> Fraction:
        while True:
            value = Fraction(self.int_between(-max_num, max_num), self.int_between(1, max_den))
            if value != 0 or not nonzero:
                return value

    def params(
        self,
        beta_nonzero: bool = True,
        beta_positive: bool = False,
    ) -> HsuShiueParams:
        while True:
            alpha = self.rational()
            beta = self.rational(nonzero=beta_nonzero)
            if beta_positive and beta <= 0:
                continue
            r = self.rational()
            if alpha == 0 and beta == 0 and r == 0:
                continue
            return HsuShiueParams(alpha, beta, r)

    def proper_x(self) -> Fraction:
        """Rational with |x| < 1 and x != 0 (series argument domain)."""
        while True:
            x = Fraction(self.int_between(-3, 3), self.int_between(4, 6))
            if x != 0:
                return x


@dataclass(frozen=True)
class Profile:
    name: str
    bits: int
    table_n: int
    exact_n: int
    series_order: int
    enum_n: int
    numeric_n: int
    spivey_n: int
    default_samples: int


PROFILES = {
    "quick": Profile("quick", 192, 8, 6, 16, 6, 3, 4, 2),
    "full": Profile("full", 256, 12, 8, 30, 8, 5, 6, 4),
}


def _poly(sampler: SmallRationalSampler, degree: int) -> PolyQ:
    return PolyQ.from_coeffs([sampler.rational() for _ in range(degree + 1)])


def _run_one(
    rid: str,
    sampler: SmallRationalSampler,
    samples: int,
    prof: Profile,
    hooks: dict | None,
) -> list[CheckReport]:
    cfg = EvalConfig(prof.bits)
    out: list[CheckReport] = []

    if rid == "GF_VS_TABLE":
        corrupt = (hooks or {}).get("corrupt_table")
        for _ in range(samples):
            table = build_table(sampler.params(), prof.table_n)
            if corrupt is not None:
                n, k = corrupt
                table = table.with_entry(n, k, table.value(n, k) + 1)
            out.append(verify_against_gf(table, prof.table_n))
    elif rid == "EQ1":
        for _ in range(samples):
            out.append(
                mellin.verify_eq1_poly(
                    sampler.int_between(0, prof.exact_n),
                    _poly(sampler, sampler.int_between(0, 3)),
                    sampler.params(),
                )
            )
    elif rid == "EQ3_VS_GF8":
        for _ in range(samples):
            out.append(
                families.check_gf_matches(
                    sampler.int_between(0, prof.exact_n + 2),
                    sampler.int_between(2, 4),
                    sampler.rational(),
                    sampler.params(),
                )
            )
    elif rid == "EQ19":
        for _ in range(samples):
            out.append(
                families.check_gf_matches(
                    sampler.int_between(0, prof.exact_n + 2),
                    1,
                    sampler.rational(),
                    sampler.params(),
                )
            )
    elif rid == "EQ4_OPERATOR":
        for _ in range(samples):
            out.append(
                mellin.verify_eq4_operator(
                    sampler.int_between(0, prof.exact_n),
                    sampler.int_between(0, 3),
                    sampler.params(),
                    prof.series_order // 2,
                )
            )
    elif rid in ("EQ5", "EQ21", "EQ38"):
        which = {"EQ5": "eq5", "EQ21": "eq21", "EQ38": "eq38_binomial"}[rid]
        for _ in range(samples):
            out.append(
                mellin.verify_series_identity(
                    which,
                    sampler.int_between(0, prof.exact_n),
                    sampler.int_between(0 if rid != "EQ38" else 1, 5),
                    sampler.params(),
                    prof.series_order,
                )
            )
    elif rid == "EQ7_GAMMA":
        for _ in range(samples):
            out.append(
                families.check_gamma_rep7(
                    sampler.int_between(0, prof.exact_n + 2),
                    sampler.int_between(1, 5),
                    sampler.rational(),
                    sampler.params(),
                )
            )
    elif rid == "EQ10":
        for _ in range(samples):
            out.append(
                families.check_degenerate_euler(
                    sampler.int_between(0, prof.exact_n + 2),
                    sampler.int_between(2, 5),
                    sampler.rational(),
                    sampler.rational(),
                )
            )
    elif rid == "EQ27":
        for _ in range(samples):
            out.append(
                families.check_degenerate_euler(
                    sampler.int_between(0, prof.exact_n + 2),
                    1,
                    sampler.rational(),
                    sampler.rational(),
                )
            )
    elif rid == "EQ14":
        out.append(families.check_eq14(20))
    elif rid == "EQ15":
        for _ in range(samples):
            out.append(
                mellin.verify_eq15(
                    sampler.int_between(0, prof.exact_n), sampler.params(), prof.series_order
                )
            )
    elif rid == "EQ16_EXACT":
        for _ in range(samples):
            out.append(
                families.check_dobinski(
                    sampler.int_between(0, prof.exact_n),
                    sampler.params(),
                    prof.series_order - 6,
                )
            )
    elif rid == "EQ16_NUMERIC":
        for _ in range(samples):
            out.append(
                analytic.eval_dobinski_numeric(
                    sampler.int_between(0, prof.numeric_n),
                    sampler.params(beta_positive=True),
                    sampler.rational(),
                    cfg,
                )
            )
    elif rid in ("EQ17", "EQ18"):
        for _ in range(samples):
            out.append(
                analytic.eval_eq17_18(
                    sampler.int_between(0, prof.numeric_n + 1),
                    sampler.params(),
                    cfg,
                    eq=int(rid[2:]),
                    start_index="derived_j0",
                )
            )
    elif rid == "EQ26":
        anchors = (Fraction(1, 3), Fraction(1, 2), Fraction(-1, 2))
        for i in range(samples):
            out.append(
                analytic.eval_theorem5(
                    sampler.params(),
                    sampler.int_between(0, prof.numeric_n),
                    anchors[i % len(anchors)],
                    cfg,
                )
            )
    elif rid == "EQ29":
        for _ in range(samples):
            out.append(
                families.check_theorem3(
                    sampler.int_between(0, prof.exact_n),
                    sampler.int_between(0, 4),
                    sampler.rational(),
                    sampler.rational(),
                )
            )
    elif rid == "EQ30_FAMILY":
        for n in range(prof.numeric_n + 1):
            out.append(analytic.eval_eq30_family(n, cfg))
    elif rid in ("EQ31", "EQ32", "EQ33"):
        for _ in range(samples):
            if rid == "EQ32":
                alpha = sampler.rational(nonzero=True)
                r = Fraction(0)
            elif rid == "EQ33":
                alpha = sampler.rational(nonzero=True)
                r = alpha
            else:
                alpha = sampler.rational()
                while True:  # keep the generic instance out of the labeled corners
                    r = sampler.rational()
                    if r != 0 and r != alpha:
                        break
            out.append(
                families.check_corollary3(sampler.int_between(0, prof.exact_n), alpha, r)
            )
    elif rid == "EQ34_THM2":
        for _ in range(samples):
            out.append(
                families.check_theorem2(
                    sampler.int_between(0, prof.exact_n + 2),
                    sampler.rational(),
                    sampler.rational(),
                )
            )
    elif rid == "EQ36":
        for _ in range(samples):
            x = sampler.rational()
            n = sampler.int_between(0, 20)
            lhs = rising_factorial(-x, n)
            rhs = (-1) ** n * falling_factorial(x, n)
            rpt = CheckReport(id=rid, params={"x": x, "n": n})
            if lhs != rhs:
                rpt.status = FAIL
                rpt.witness = f"{fmt_rational(lhs)} != {fmt_rational(rhs)}"
            out.append(rpt)
    elif rid == "EQ37_CORRECTED":
        for _ in range(samples):
            out.append(
                families.check_theorem4(
                    sampler.int_between(0, prof.exact_n + 2),
                    sampler.int_between(0, 5),
                    sampler.rational(nonzero=True),
                    sampler.rational(),
                    exponent="corrected",
                )
            )
    elif rid == "EQ37_PRINTED":
        # fixed witnesses: the superseded form must fail, so samples are not
        # drawn from the region (beta = 1, s = 0, ...) where it degenerates
        witnesses = ((1, 1, Fraction(2), Fraction(1)), (2, 2, Fraction(3), Fraction(-1)))
        for i in range(min(samples, len(witnesses))):
            n, s, beta, r = witnesses[i]
            out.append(families.check_theorem4(n, s, beta, r, exponent="printed"))
    elif rid == "COR2":
        for _ in range(samples):
            out.append(
                families.check_corollary2(
                    sampler.int_between(0, prof.exact_n + 2),
                    sampler.int_between(1, 10),
                    sampler.rational(),
                )
            )
    elif rid == "COR4":
        for _ in range(samples):
            out.append(
                families.check_corollary4(
                    sampler.int_between(0, prof.exact_n), sampler.int_between(0, 5)
                )
            )
    elif rid == "COR5_CORRECTED":
        for _ in range(samples):
            out.append(
                families.check_corollary5(
                    sampler.int_between(0, prof.exact_n),
                    sampler.int_between(1, 6),
                    sampler.rational(nonzero=True),
                    sampler.rational(),
                    exponent="corrected",
                )
            )
    elif rid == "COR5_PRINTED":
        witnesses = ((1, 1, Fraction(2), Fraction(1)), (1, 2, Fraction(2), Fraction(1)))
        for i in range(min(samples, len(witnesses))):
            n, m, beta, r = witnesses[i]
            out.append(families.check_corollary5(n, m, beta, r, exponent="printed"))
    elif rid == "SPIVEY":
        for _ in range(samples):
            out.append(
                families.check_spivey(
                    sampler.int_between(0, prof.spivey_n),
                    sampler.int_between(0, prof.spivey_n),
                    sampler.int_between(1, 3),
                    sampler.rational(),
                    sampler.params(),
                )
            )
    elif rid == "MINUS_ONE":
        for _ in range(samples):
            out.append(
                families.check_minus_one(
                    sampler.int_between(0, prof.exact_n + 2),
                    sampler.int_between(1, 5),
                    sampler.params(),
                )
            )
    elif rid == "BPA_NUMBERS":
        classical = HsuShiueParams(0, 1, 0)
        for n in range(prof.enum_n + 1):
            for s in range(4):
                got = families.bpa_number(n, s, classical)
                want = barred_preferential_count(n, s)
                rpt = CheckReport(id=rid, params={"n": n, "s": s})
                if got != want:
                    rpt.status = FAIL
                    rpt.witness = f"polynomial {fmt_rational(got)} != enumeration {want}"
                out.append(rpt)
    elif rid == "FUBINI":
        classical = HsuShiueParams(0, 1, 0)
        for n in range(prof.enum_n + 1):
            got = families.geometric_poly(n, 1, classical)(1)
            want = ordered_set_partitions_count(n)
            rpt = CheckReport(id=rid, params={"n": n})
            if got != want:
                rpt.status = FAIL
                rpt.witness = f"polynomial {fmt_rational(got)} != enumeration {want}"
            out.append(rpt)
    else:
        raise ValueError(f"unknown identity id {rid!r}")
    return out


def run(
    rid: str,
    seed: int = 1,
    samples: int = 4,
    profile: str = "full",
    hooks: dict | None = None,
) -> list[CheckReport]:
    """Verify one registered identity on deterministically sampled inputs."""
    if rid not in IDENTITY_IDS:
        raise ValueError(f"unknown identity id {rid!r}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    prof = PROFILES[profile]
    sampler = SmallRationalSampler(seed * 1_000_003 + IDENTITY_IDS.index(rid))
    reports = _run_one(rid, sampler, samples, prof, hooks)
    if rid in EXPECTED_FAIL_IDS:
        for rpt in reports:
            if rpt.status == FAIL:
                rpt.status = EXPECTED_FAIL_CONFIRMED
            elif rpt.status == PASS:
                rpt.status = FAIL
                rpt.witness = "superseded form unexpectedly passed"
    return reports


def run_all(
    seed: int = 1,
    profile: str = "quick",
    hooks: dict | None = None,
) -> dict:
    """Run the whole registry; summary counts plus any unexpected reports."""
    prof = PROFILES[profile]
    reports: list[CheckReport] = []
    for rid in IDENTITY_IDS:
        reports.extend(run(rid, seed=seed, samples=prof.default_samples, profile=profile, hooks=hooks))
    counts = {PASS: 0, FAIL: 0, EXPECTED_FAIL_CONFIRMED: 0}
    for rpt in reports:
        counts[rpt.status] += 1
    return {
        "profile": profile,
        "seed": seed,
        "counts": counts,
        "unexpected": [r.to_dict() for r in reports if not r.ok()],
        "reports": reports,
    }

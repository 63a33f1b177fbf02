"""Exact-arithmetic toolkit for generalized Stirling numbers, geometric
polynomial families, degenerate Bernoulli/Euler polynomials, and the
oracle-backed verification of the identities connecting them."""

from .analytic import (
    EvalConfig,
    digamma,
    eval_dobinski_numeric,
    eval_eq17_18,
    eval_eq30_family,
    eval_theorem5,
    gamma_euler,
    hurwitz_zeta,
    log2,
    pi,
    zeta_int,
)
from .enumeration import (
    barred_preferential_count,
    enumerate_oracle,
    ordered_set_partitions_count,
    r_stirling_count,
    set_partitions_count,
)
from .exact import (
    Rational,
    as_rational,
    binomial_general,
    falling_factorial,
    gen_factorial,
    rising_factorial,
)
from .families import (
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_poly,
    bpa_number,
    carlitz_beta,
    degenerate_bernoulli2,
    degenerate_euler,
    euler_poly,
    eval_minus_one,
    exp_poly,
    geometric_poly,
    howard_power_sum,
    spivey_step,
)
from .identities import IDENTITY_IDS, run, run_all
from .mellin import GradedSeries, apply_operator, embed_poly, embed_series
from .params import HsuShiueParams
from .polynomials import PolyQ
from .report import CheckReport
from .series import (
    PowerSeries,
    binom_deform,
    compose,
    divide,
    exp_series,
    gf_bernoulli2_degenerate,
    gf_carlitz_beta,
    gf_degenerate_euler,
    gf_w,
    inverse,
    log_series,
    pow_int,
    pow_series,
)
from .stirling import StirlingTable, build_table, cached_table, specialize, verify_against_gf

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "EvalConfig",
    "GradedSeries",
    "HsuShiueParams",
    "IDENTITY_IDS",
    "PolyQ",
    "PowerSeries",
    "Rational",
    "StirlingTable",
    "apply_operator",
    "as_rational",
    "barred_preferential_count",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly",
    "binom_deform",
    "binomial_general",
    "bpa_number",
    "build_table",
    "cached_table",
    "carlitz_beta",
    "compose",
    "degenerate_bernoulli2",
    "degenerate_euler",
    "digamma",
    "divide",
    "embed_poly",
    "embed_series",
    "enumerate_oracle",
    "euler_poly",
    "eval_dobinski_numeric",
    "eval_eq17_18",
    "eval_eq30_family",
    "eval_minus_one",
    "eval_theorem5",
    "exp_poly",
    "exp_series",
    "falling_factorial",
    "gamma_euler",
    "gen_factorial",
    "geometric_poly",
    "gf_bernoulli2_degenerate",
    "gf_carlitz_beta",
    "gf_degenerate_euler",
    "gf_w",
    "howard_power_sum",
    "hurwitz_zeta",
    "inverse",
    "log2",
    "log_series",
    "ordered_set_partitions_count",
    "pi",
    "pow_int",
    "pow_series",
    "r_stirling_count",
    "rising_factorial",
    "run",
    "run_all",
    "set_partitions_count",
    "specialize",
    "spivey_step",
    "verify_against_gf",
    "zeta_int",
]

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from geopoly import families as fam
from geopoly.enumeration import (
    barred_preferential_count,
    ordered_set_partitions_count,
    set_partitions_count,
)
from geopoly.exact import gen_factorial, rising_factorial
from geopoly.params import HsuShiueParams
from geopoly.series import gf_w

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=3)

CLASSICAL = HsuShiueParams(0, 1, 0)
RATIONAL = HsuShiueParams(F(1, 2), 2, -1)


def test_exp_poly_basics():
    assert fam.exp_poly(0, RATIONAL).coeffs == (1,)
    p1 = fam.exp_poly(1, RATIONAL)
    assert p1.coeffs == (RATIONAL.r, 1)
    bell3 = fam.exp_poly(3, CLASSICAL)
    assert bell3.coeffs == (0, 1, 3, 1)
    assert bell3(1) == set_partitions_count(3)


def test_geometric_poly_low_orders():
    assert fam.geometric_poly(0, 5, RATIONAL).coeffs == (1,)
    w1 = fam.geometric_poly(1, 4, RATIONAL)
    assert w1(F(1, 3)) == RATIONAL.r + 4 * RATIONAL.beta * F(1, 3)


def test_fubini_chain():
    # w_n(1; 0,1,0) against exhaustive enumeration for n <= 8
    for n in range(9):
        assert fam.geometric_poly(n, 1, CLASSICAL)(1) == ordered_set_partitions_count(n)


def test_bpa_numbers_vs_enumeration():
    for n in range(9):
        for s in range(4):
            assert fam.bpa_number(n, s, CLASSICAL) == barred_preferential_count(n, s)


def test_negative_order_constant_term():
    # w_n^(-s)(0) is the k = 0 table entry (r|alpha)_2
    p = HsuShiueParams(F(1, 3), F(5, 2), F(-3, 4))
    w = fam.geometric_poly(2, -2, p)
    assert w(0) == gen_factorial(p.r, p.alpha, 2)


def test_eval_minus_one():
    assert fam.eval_minus_one(0, 3, RATIONAL) == 1
    assert fam.eval_minus_one(2, 1, HsuShiueParams(1, 2, 3)) == 0  # (3-2)(3-2-1)
    p = HsuShiueParams(F(1, 4), F(2, 3), F(5, 2))
    for n in range(11):
        for s in range(1, 5):
            assert fam.eval_minus_one(n, s, p) == gen_factorial(
                p.r - p.beta * s, p.alpha, n
            )
    # n=2, symbolic shape (r - beta*s)(r - beta*s - alpha)
    s = 2
    expected = (p.r - p.beta * s) * (p.r - p.beta * s - p.alpha)
    assert fam.eval_minus_one(2, s, p) == expected


@settings(max_examples=30, deadline=None)
@given(
    alpha=small_fractions,
    beta=small_fractions,
    r=small_fractions,
    x=small_fractions,
    n=st.integers(0, 10),
    s=st.integers(1, 4),
)
def test_gf_matches_formula_everywhere(alpha, beta, r, x, n, s):
    if alpha == 0 and beta == 0 and r == 0:
        alpha = F(1)
    params = HsuShiueParams(alpha, beta, r)
    assert fam.check_gf_matches(n, s, x, params).status == "pass"


def test_gf_order_range_matches_formula():
    for m in range(-3, 6):
        w = fam.geometric_poly(7, m, RATIONAL)
        if m >= 1:
            assert gf_w(RATIONAL, m, F(2, 3), 7).egf_coeff(7) == w(F(2, 3))


def test_spivey_reduces_at_edges():
    p = HsuShiueParams(F(1, 3), F(-2), F(3, 4))
    for n in range(5):
        assert fam.spivey_step(n, 0, 2, F(1, 2), p) == fam.geometric_poly(n, 2, p)(
            F(1, 2)
        )
    for m in range(7):
        assert fam.spivey_step(0, m, 3, F(-1, 3), p) == fam.geometric_poly(m, 3, p)(
            F(-1, 3)
        )


def test_spivey_fubini_instance():
    assert fam.spivey_step(2, 2, 1, 1, CLASSICAL) == 75


@settings(max_examples=25, deadline=None)
@given(
    n=st.integers(0, 6),
    m=st.integers(0, 6),
    s=st.integers(1, 3),
    x=small_fractions,
    alpha=small_fractions,
    beta=small_fractions,
    r=small_fractions,
)
def test_spivey_recurrence_property(n, m, s, x, alpha, beta, r):
    if alpha == 0 and beta == 0 and r == 0:
        beta = F(1)
    assert fam.check_spivey(n, m, s, x, HsuShiueParams(alpha, beta, r)).status == "pass"


def test_bernoulli_and_euler_polys():
    assert fam.bernoulli_poly(0).coeffs == (1,)
    assert fam.euler_poly(0, 3).coeffs == (1,)
    assert fam.bernoulli_number(2) == F(1, 6)
    assert fam.bernoulli_poly(2).coeffs == (F(1, 6), -1, 1)  # x^2 - x + 1/6
    assert fam.euler_poly(2)(0) == 0
    # known classical identity B_n(1) = B_n + [n = 1]
    for n in range(2, 12):
        assert fam.bernoulli_poly(n)(1) == fam.bernoulli_number(n)


def test_eq14_by_hand_and_to_20():
    # n = 2: -1/2 {2 1} + 2/3 {2 2} = 1/6
    assert -F(1, 2) * 1 + F(2, 3) * 1 == F(1, 6)
    assert fam.check_eq14(20).status == "pass"


def test_degenerate_euler_values():
    assert fam.degenerate_euler(0, 2, F(1, 3), F(1, 2)) == 1
    # first-order value r - 1/2 for any alpha
    for a in (F(0), F(1, 3), F(-5, 4)):
        assert fam.degenerate_euler(1, 1, a, F(2)) == F(3, 2)
    for n in range(11):
        assert fam.check_degenerate_euler(n, 1, F(1, 3), 2).status == "pass"
        assert fam.check_degenerate_euler(n, 4, F(-2, 3), F(1, 4)).status == "pass"


def test_degenerate_euler_classical_slice_scaling():
    # at alpha = 0 the (0, beta, r) geometric value matches E_n^(s)(r/beta) beta^n
    beta, r, s = F(3, 2), F(5, 4), 3
    p = HsuShiueParams(0, beta, r)
    for n in range(11):
        lhs = fam.geometric_poly(n, s, p)(F(-1, 2))
        assert lhs == fam.euler_poly(n, s)(r / beta) * beta**n


def test_degenerate_bernoulli2_values():
    assert fam.degenerate_bernoulli2(0, F(1, 2), F(3)) == 1
    for a in (F(0), F(1, 2), F(-1, 3)):
        assert fam.degenerate_bernoulli2(1, a, F(1, 4)) == F(-1, 4)
    for n in range(11):
        assert fam.check_theorem2(n, F(1, 2), 1).status == "pass"


def test_theorem2_alpha0_whitney_reduction():
    # B_n(r/beta) beta^n = sum_k W_{beta,r}(n,k) (-1)^k k!/(beta^(n-k) (k+1)) * beta^n
    from geopoly.stirling import cached_table
    from math import factorial

    beta, r = F(2), F(3, 2)
    table = cached_table(HsuShiueParams(0, beta, r), 8)
    for n in range(9):
        closed = sum(
            table.value(n, k) * (-1) ** k * F(factorial(k), (k + 1)) / beta ** (n - k)
            for k in range(n + 1)
        )
        assert fam.bernoulli_poly(n)(r / beta) == closed


def test_carlitz_beta_values():
    assert fam.carlitz_beta(0, F(1, 3), F(2)) == 1
    assert fam.carlitz_beta(1, F(1, 3), 0) == (F(1, 3) - 1) / 2
    for n in range(9):
        assert fam.carlitz_beta(n, 0, F(1, 2)) == fam.bernoulli_poly(n)(F(1, 2))


def test_theorem3_across_parameters():
    for n in range(9):
        assert fam.check_theorem3(n, 0, F(1, 2), 3).status == "pass"
        assert fam.check_theorem3(n, 1, F(1, 2), 3).status == "pass"
        assert fam.check_theorem3(n, 2, F(1, 2), 3).status == "pass"
        assert fam.check_theorem3(n, 3, F(-1, 3), F(2, 3)).status == "pass"


def test_corollary2_direct_summation():
    for n in range(9):
        for r in (1, 2, 4, 10):
            assert fam.check_corollary2(n, r, F(1, 3)).status == "pass"
    # s = r = 2, alpha = 1/3: closed form equals j-sum of products
    alpha = F(1, 3)
    direct = sum(gen_factorial(j, alpha, 5) for j in range(2))
    table_sum = fam.check_corollary2(5, 2, alpha)
    assert table_sum.status == "pass"
    assert direct == gen_factorial(0, alpha, 5) + gen_factorial(1, alpha, 5)


def test_corollary3_with_subcases():
    for n in range(9):
        assert fam.check_corollary3(n, F(1, 2), F(0)).id == "EQ32"
        assert fam.check_corollary3(n, F(1, 2), F(0)).status == "pass"
        assert fam.check_corollary3(n, F(1, 3), F(1, 3)).id == "EQ33"
        assert fam.check_corollary3(n, F(1, 3), F(1, 3)).status == "pass"
        rep = fam.check_corollary3(n, F(-2, 3), F(5, 4))
        assert rep.id == "EQ31" and rep.status == "pass"


def test_theorem4_witness_and_range():
    # documented witness: LHS -1, corrected RHS -1, printed RHS -1/2
    bp = fam.bernoulli_poly(2)
    assert bp(F(1, 2)) - bp(F(-1, 2)) == -1
    assert fam.check_theorem4(1, 1, 2, 1).status == "pass"
    printed = fam.check_theorem4(1, 1, 2, 1, exponent="printed")
    assert printed.status == "fail"
    assert "-1/2" in printed.witness
    for n in range(8):
        for s in range(4):
            assert fam.check_theorem4(n, s, F(3, 2), F(-1, 3)).status == "pass"
    # beta = 1: both exponents coincide, printed passes too
    for n in range(6):
        for s in range(4):
            assert fam.check_theorem4(n, s, 1, 0, exponent="printed").status == "pass"


def test_theorem4_validation():
    with pytest.raises(ValueError):
        fam.check_theorem4(1, 1, 0, 1)
    with pytest.raises(ValueError):
        fam.check_theorem4(1, 1, 2, 1, exponent="bogus")


def test_corollary4_rising_factorial_form():
    for n in range(9):
        for r in range(6):
            assert fam.check_corollary4(n, r).status == "pass"


def test_howard_power_sum_witnesses():
    assert fam.howard_power_sum(1, 2, 2, 1) == 4
    assert fam.howard_power_sum(0, 5, F(1, 2), F(7)) == 5  # m terms of 1
    assert fam.howard_power_sum(1, 1, 2, 1) == 1
    printed = fam.check_corollary5(1, 1, 2, 1, exponent="printed")
    assert printed.status == "fail"
    assert "1/2" in printed.witness


@settings(max_examples=30, deadline=None)
@given(
    n=st.integers(0, 8),
    m=st.integers(1, 6),
    beta=small_fractions.filter(lambda v: v != 0),
    r=small_fractions,
)
def test_howard_matches_direct_sums(n, m, beta, r):
    assert fam.howard_power_sum(n, m, beta, r) == sum(
        (r + beta * j) ** n for j in range(m)
    )


def test_dobinski_exact():
    assert fam.check_dobinski(0, RATIONAL, 12).status == "pass"
    assert fam.check_dobinski(1, RATIONAL, 12).status == "pass"
    assert fam.check_dobinski(8, HsuShiueParams(F(1, 2), 2, -1), 24).status == "pass"
    with pytest.raises(ValueError):
        fam.check_dobinski(2, HsuShiueParams(1, 0, 0), 8)


def test_gamma_rep_collapse():
    assert fam.check_gamma_rep7(0, 1, F(1, 2), RATIONAL).status == "pass"
    for n in range(11):
        for s in range(1, 6):
            assert fam.check_gamma_rep7(n, s, F(2, 3), RATIONAL).status == "pass"
    # s = 1 weight <1>_k = k! recovers the first-order polynomial
    n = 5
    w = fam.geometric_poly(n, 1, RATIONAL)
    from geopoly.stirling import cached_table
    from math import factorial

    table = cached_table(RATIONAL, n)
    x = F(3, 5)
    direct = sum(
        table.value(n, k) * (x * RATIONAL.beta) ** k * rising_factorial(1, k)
        for k in range(n + 1)
    )
    assert direct == w(x)

from decimal import Decimal, localcontext
from fractions import Fraction as F

import pytest

from geopoly import analytic as A
from geopoly.params import HsuShiueParams

CFG = A.EvalConfig(256)

# 55-digit references, cross-checked against an independent implementation
PI_REF = "3.141592653589793238462643383279502884197169399375105821"
GAMMA_REF = "0.5772156649015328606065120900824024310421593359399235988"
LOG2_REF = "0.6931471805599453094172321214581765680755001343602552541"
ZETA2_REF = "1.644934066848226436472415166646025189218949901206798438"
ZETA3_REF = "1.202056903159594285399738161511449990764986292340498882"
HZ3_HALF_REF = "8.4143983221171599977981671305801499353549040463835"
PSI_THIRD_REF = "-3.1320337800208063229964190742872688541554282967204"


def _close(value: Decimal, ref: str, places: int = 48) -> bool:
    with localcontext() as ctx:
        ctx.prec = 80
        return abs(value - Decimal(ref)) < Decimal(10) ** -places


def test_reference_constants():
    assert _close(A.pi(CFG), PI_REF)
    assert _close(A.gamma_euler(CFG), GAMMA_REF)
    assert _close(A.log2(CFG), LOG2_REF)


def test_reference_zeta_values():
    assert _close(A.zeta_int(2, CFG), ZETA2_REF)
    assert _close(A.zeta_int(3, CFG), ZETA3_REF)
    assert _close(A.hurwitz_zeta(3, F(1, 2), CFG), HZ3_HALF_REF)
    assert _close(A.digamma(F(1, 3), CFG), PSI_THIRD_REF)


def test_zeta_against_mpmath_oracle():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 60
    for s in (2, 5, 11, 30):
        ours = A.zeta_int(s, CFG)
        theirs = Decimal(mpmath.nstr(mpmath.zeta(s), 55))
        assert _close(ours, str(theirs), places=50)
    for a in (F(1, 3), F(5, 4)):
        ours = A.hurwitz_zeta(4, a, CFG)
        theirs = mpmath.nstr(mpmath.zeta(4, mpmath.mpf(a.numerator) / a.denominator), 55)
        assert _close(ours, theirs, places=50)


def test_hurwitz_at_one_is_zeta():
    for s in range(2, 13):
        with localcontext() as ctx:
            ctx.prec = CFG.digits
            diff = abs(A.hurwitz_zeta(s, 1, CFG) - A.zeta_int(s, CFG))
        assert diff == 0  # same cache key path and same definition


def test_hurwitz_half_doubling_relation():
    with localcontext() as ctx:
        ctx.prec = CFG.digits
        for s in range(2, 11):
            lhs = A.hurwitz_zeta(s, F(1, 2), CFG)
            rhs = (Decimal(2) ** s - 1) * A.zeta_int(s, CFG)
            assert abs(lhs - rhs) < Decimal(10) ** -60


def test_zeta2_vs_independent_pi():
    with localcontext() as ctx:
        ctx.prec = CFG.digits
        assert abs(A.zeta_int(2, CFG) - A.pi(CFG) ** 2 / 6) < Decimal(10) ** -60


def test_digamma_recurrence():
    with localcontext() as ctx:
        ctx.prec = CFG.digits
        for a in (F(1, 3), F(3, 4), F(5, 4), F(7, 2), F(15, 4)):
            lhs = A.digamma(a + 1, CFG)
            rhs = A.digamma(a, CFG) + A.to_decimal(1 / a, CFG)
            assert abs(lhs - rhs) < Decimal(10) ** -60


def test_digamma_half_closed_form():
    with localcontext() as ctx:
        ctx.prec = CFG.digits
        lhs = A.digamma(F(1, 2), CFG)
        rhs = -A.gamma_euler(CFG) - 2 * A.log2(CFG)
        assert abs(lhs - rhs) < Decimal(10) ** -60


def test_digamma_taylor_series_with_tail_bound():
    # psi(1+x) = -gamma + sum_{k>=1} zeta(k+1) (-1)^(k+1) x^k, |x| < 1;
    # tail beyond K bounded by zeta(2) |x|^(K+1) / (1 - |x|)
    for x in (F(1, 3), F(-1, 3)):
        K = 150
        with localcontext() as ctx:
            ctx.prec = CFG.digits
            total = -A.gamma_euler(CFG)
            for k in range(1, K + 1):
                c = F((-1) ** (k + 1)) * x**k
                total += A.zeta_int(k + 1, CFG) * A.to_decimal(c, CFG)
            tail = 2 * abs(x) ** (K + 1) / (1 - abs(x))
            direct = A.digamma(1 + x, CFG)
            assert abs(total - direct) < A.to_decimal(tail, CFG) + Decimal(10) ** -60


def test_domain_validation():
    with pytest.raises(ValueError):
        A.zeta_int(1, CFG)
    with pytest.raises(ValueError):
        A.hurwitz_zeta(3, F(-1, 2), CFG)
    with pytest.raises(ValueError):
        A.digamma(0, CFG)
    with pytest.raises(ValueError):
        A.EvalConfig(16)


def test_theorem5_reduces_to_digamma_series_at_n0():
    rep = A.eval_theorem5(HsuShiueParams(0, 1, 0), 0, F(-1, 2), CFG)
    assert rep.status == "pass"


def test_theorem5_n1_classical():
    rep = A.eval_theorem5(HsuShiueParams(0, 1, 0), 1, F(1, 3), CFG)
    assert rep.status == "pass"


def test_theorem5_rational_parameters():
    rep = A.eval_theorem5(HsuShiueParams(F(1, 2), 2, 1), 3, F(1, 2), CFG)
    assert rep.status == "pass"
    assert Decimal(rep.detail["abs_diff"]) < Decimal("1e-30")


def test_theorem5_domain():
    with pytest.raises(ValueError):
        A.eval_theorem5(HsuShiueParams(0, 1, 0), 1, F(3, 2), CFG)


def test_eq30_family_first_three():
    for n in range(3):
        rep = A.eval_eq30_family(n, CFG)
        assert rep.status == "pass"
        assert Decimal(rep.detail["abs_diff"]) < Decimal("1e-30")


def test_eq30_closed_forms_match_listed_values():
    # n = 0: log 2; n = 1: log2 + (3/4) zeta(2); n = 2: adds (14/8) zeta(3)
    with localcontext() as ctx:
        ctx.prec = CFG.digits
        lhs0 = Decimal(A.eval_eq30_family(0, CFG).detail["lhs"])
        assert abs(lhs0 - A.log2(CFG)) < Decimal("1e-60")
        lhs1 = Decimal(A.eval_eq30_family(1, CFG).detail["lhs"])
        want1 = A.log2(CFG) + Decimal(3) / 4 * A.zeta_int(2, CFG)
        assert abs(lhs1 - want1) < Decimal("1e-60")
        lhs2 = Decimal(A.eval_eq30_family(2, CFG).detail["lhs"])
        want2 = (
            A.log2(CFG)
            + Decimal(9) / 4 * A.zeta_int(2, CFG)
            + Decimal(14) / 8 * A.zeta_int(3, CFG)
        )
        assert abs(lhs2 - want2) < Decimal("1e-60")


def test_eq17_18_hand_witnesses():
    p = HsuShiueParams(1, 2, 3)
    ok = A.eval_eq17_18(1, p, CFG, eq=17)
    assert ok.status == "pass"
    # LHS collapses to r = 3 through the cosine/sine evaluation
    assert abs(Decimal(ok.detail["lhs"]) - 3) < Decimal("1e-60")
    bad = A.eval_eq17_18(1, p, CFG, eq=17, start_index="paper_j1")
    assert bad.status == "fail"
    assert Decimal(bad.detail["rhs"]) == 0
    ok18 = A.eval_eq17_18(1, p, CFG, eq=18)
    assert ok18.status == "pass"
    assert abs(Decimal(ok18.detail["lhs"]) - 2) < Decimal("1e-60")  # beta
    bad18 = A.eval_eq17_18(1, p, CFG, eq=18, start_index="paper_j1")
    assert bad18.status == "fail"


def test_eq17_18_larger_orders():
    assert A.eval_eq17_18(4, HsuShiueParams(0, 1, 0), CFG, eq=17).status == "pass"
    assert A.eval_eq17_18(6, HsuShiueParams(F(1, 3), F(-3, 2), F(5, 4)), CFG, eq=17).status == "pass"
    assert A.eval_eq17_18(5, HsuShiueParams(F(1, 3), F(-3, 2), F(5, 4)), CFG, eq=18).status == "pass"


def test_dobinski_numeric():
    rep = A.eval_dobinski_numeric(3, HsuShiueParams(0, 1, 0), 1, CFG)
    assert rep.status == "pass"
    # e * B_3 with the Bell number from exhaustive enumeration
    from geopoly.enumeration import set_partitions_count

    with localcontext() as ctx:
        ctx.prec = CFG.digits
        want = Decimal(1).exp() * set_partitions_count(3)
        assert abs(Decimal(rep.detail["rhs"]) - want) < Decimal("1e-60")
    assert A.eval_dobinski_numeric(4, HsuShiueParams(F(1, 2), 2, 1), F(3, 2), CFG).status == "pass"
    with pytest.raises(ValueError):
        A.eval_dobinski_numeric(2, HsuShiueParams(1, -1, 0), 1, CFG)


def test_doubling_precision_shrinks_diff():
    p = HsuShiueParams(F(1, 2), 2, 1)
    d256 = Decimal(A.eval_theorem5(p, 2, F(1, 3), A.EvalConfig(256)).detail["abs_diff"])
    d512 = Decimal(A.eval_theorem5(p, 2, F(1, 3), A.EvalConfig(512)).detail["abs_diff"])
    assert d512 < d256
    e256 = Decimal(A.eval_eq30_family(1, A.EvalConfig(256)).detail["abs_diff"])
    e512 = Decimal(A.eval_eq30_family(1, A.EvalConfig(512)).detail["abs_diff"])
    assert e512 < e256


def test_tolerance_configuration():
    assert A.EvalConfig(256).tolerance == F(1, 2**224)
    assert A.EvalConfig(256).tolerance_label() == "2^-224"
    custom = A.EvalConfig(256, tail_tolerance=F(1, 10**40))
    assert custom.tolerance == F(1, 10**40)

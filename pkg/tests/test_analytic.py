import math

import mpmath
import numpy as np
import pytest

from sievelab import analytic
from sievelab.analytic import (
    EULER_GAMMA,
    ConstantKind,
    correction_constant,
    divergence_trend,
    eta2,
    eta4_empirical,
    mertens_lower_bound,
    mu,
    predict,
    sifting_product,
    twin_prime_constant,
)
from sievelab.counting import count_gap_pairs, count_twin_patterns
from sievelab.errors import DomainError, UndefinedRatioError
from sievelab.sieve import build_flags, twin_flags

# OEIS A005597
TWIN_PRIME_CONSTANT = mpmath.mpf("0.66016181584686957392781211001455577843262336028473341331944")


def plain_primes(n):
    s = np.ones(n + 1, dtype=bool)
    s[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if s[p]:
            s[p * p :: p] = False
    return np.flatnonzero(s)


def test_sifting_product_small():
    assert sifting_product(1, 5).value == pytest.approx(4 / 5, rel=1e-15)
    assert sifting_product(2, 7).value == pytest.approx(3 / 7, rel=1e-15)
    assert sifting_product(4, 12).value == pytest.approx((1 / 5) * (3 / 7) * (7 / 11), rel=1e-15)


def test_sifting_product_high_precision_oracle():
    ps = [int(p) for p in plain_primes(10**6) if p >= 5]
    mpmath.mp.dps = 30
    oracle = mpmath.exp(mpmath.fsum(mpmath.log(1 - mpmath.mpf(2) / p) for p in ps))
    assert sifting_product(2, 10**6).value == pytest.approx(float(oracle), rel=1e-12)


def test_sifting_product_rejects():
    with pytest.raises(DomainError):
        sifting_product(3, 100)
    with pytest.raises(DomainError):
        sifting_product(2, 4)


def test_sifting_product_decreases():
    vals = [sifting_product(2, b).value for b in (7, 11, 100, 1000, 10**5)]
    assert all(0 < v < 1 for v in vals)
    assert vals == sorted(vals, reverse=True)


def test_sifting_products_vectorized():
    bounds = [5, 6, 11, 12, 997, 5000]
    bulk = analytic.sifting_products(4, bounds)
    for b, v in zip(bounds, bulk):
        assert v == pytest.approx(sifting_product(4, b).value, rel=1e-12)


def test_mertens_lower_bound_m1():
    assert mertens_lower_bound(2, 1) == pytest.approx(math.exp(2 * EULER_GAMMA) * 3 / 5, rel=1e-15)


def test_mertens_lower_bound_paper_margins(flags_1e6, twin_1e6):
    assert count_gap_pairs(flags_1e6, 2, 10**6).count - mertens_lower_bound(2, 166666) > 1251
    quad = count_twin_patterns(twin_1e6, 1, 166666).count
    assert quad - mertens_lower_bound(4, 166666) == pytest.approx(52.07, abs=0.01)


def test_constants_by_definition():
    ps = [5, 7, 11, 13]
    c12 = math.prod(p * (p - 2) / (p - 1) ** 2 for p in ps)
    c14 = math.prod((p - 4) * p**3 / (p - 1) ** 4 for p in ps)
    c24 = math.prod((p - 4) * p / (p - 2) ** 2 for p in ps)
    assert correction_constant("C12", 13).value == pytest.approx(c12, rel=1e-14)
    assert correction_constant("C14", 16).value == pytest.approx(c14, rel=1e-14)
    assert correction_constant(ConstantKind.C24, 13).value == pytest.approx(c24, rel=1e-14)


def test_constants_cauchy():
    for kind in ConstantKind:
        a, b, c = (correction_constant(kind, x).value for x in (10**4, 10**5, 10**6))
        assert abs(c - b) < abs(b - a)


@pytest.mark.parametrize("m", [10**3, 10**4, 10**5])
def test_single_double_sieving_relation(m):
    s2 = sifting_product(2, 6 * m).value
    s1 = sifting_product(1, 6 * m).value
    c12 = correction_constant("C12", 6 * m).value
    assert abs(s2 - c12 * s1**2) / s2 < 1e-3


def test_twin_prime_constant_converges():
    # independent route: extended precision over a plain sieve
    ps = plain_primes(10**7)
    ps = ps[ps >= 3].astype(np.longdouble)
    oracle = np.prod(ps * (ps - 2) / (ps - 1) ** 2)
    value = twin_prime_constant(10**7)
    assert value == pytest.approx(float(oracle), abs=1e-9)
    assert abs(value - float(TWIN_PRIME_CONSTANT)) < 1e-6


@pytest.mark.parametrize("g, mode, expected", [
    (2, "difference", 1.0),
    (28, "difference", 1.2),
    (30, "difference", 8 / 3),
    (6, "difference", 2.0),
    (98, "difference", 1.2),  # 7^2: distinct divisors only
    (94, "sum", 0.5 * 46 / 45),
    (30, "sum", 4 / 3),
])
def test_eta2(g, mode, expected):
    assert eta2(g, mode) == pytest.approx(expected, rel=1e-15)


def test_eta2_tracks_empirical_ratio(flags_1e6):
    pi2 = count_gap_pairs(flags_1e6, 2, 10**6).count
    for g in (28, 30, 6):
        ratio = count_gap_pairs(flags_1e6, g, 10**6).count / pi2
        assert ratio == pytest.approx(eta2(g), rel=0.05)


def test_eta4(twin_1e6):
    assert eta4_empirical(twin_1e6, 1, 166666) == 1.0
    r5 = eta4_empirical(twin_1e6, 5, 166666)
    r7 = eta4_empirical(twin_1e6, 7, 166666)
    assert r5 > 0 and r7 > 0
    with pytest.raises(UndefinedRatioError):
        eta4_empirical(twin_flags(build_flags(10)), 1, 0)


def test_mu_values():
    assert mu(2, 32) == pytest.approx(0.706, abs=0.01)
    assert mu(2, 10**5) == pytest.approx(0.972, abs=0.005)
    assert mu(4, 227) == pytest.approx(0.136278, abs=0.002)
    with pytest.raises(DomainError):
        mu(2, 5)


def test_mu_brute_force():
    n = 50
    num = math.fsum(1 / (math.log(t) * math.log(n - t)) ** 2 for t in range(2, n - 1))
    den = math.fsum(1 / math.log(t) ** 4 for t in range(2, n - 1))
    assert mu(4, n) == pytest.approx(num / den, rel=1e-13)


def test_mu_grid_minima():
    for k, where in ((2, 32), (4, 227)):
        vals = {n: mu(k, n) for n in range(6, 1001)}
        assert min(vals, key=vals.get) == where


def test_predict_paper_errors(flags_1e6):
    assert 8168 - predict("twin", flags_1e6, 10**6).predicted == pytest.approx(32.5356, abs=1e-3)
    assert 166 - predict("quad_from_primes", flags_1e6, 10**6).predicted == pytest.approx(8.3904, abs=1e-3)
    assert 166 - predict("quad_from_twins", flags_1e6, 10**6).predicted == pytest.approx(7.1272, abs=1e-3)


def test_predict_floor_rule(flags_1e6):
    p = predict("twin", flags_1e6, 10**6, m_rule="floor")
    assert p.inputs["m"] == 166666
    assert 8168 - p.predicted == pytest.approx(32.633, abs=1e-3)


def test_predict_inputs(flags_1e6):
    p = predict("twin", flags_1e6, 10**6)
    assert p.inputs["m"] == 166664 and p.inputs["product_bound"] == 6 * 166664
    assert (p.inputs["pi_a"], p.inputs["pi_b"]) == (39265, 39231)
    assert p.inputs["pi_a"] + p.inputs["pi_b"] + 2 == 78498


def test_predict_gap_and_goldbach(flags_1e6):
    twin = predict("twin", flags_1e6, 10**6)
    gap = predict("gap", flags_1e6, 10**6, g=30, source="predictor")
    assert gap.predicted == pytest.approx(8 / 3 * twin.predicted)
    gb = predict("goldbach", flags_1e6, g=1000)
    assert gb.predicted == pytest.approx(gb.inputs["pi2"] * mu(2, 1000) * eta2(1000, "sum"))


def test_predict_twin_goldbach_variants(flags_1e6):
    p = predict("twin_goldbach", flags_1e6, m=1000)
    assert p.predicted > 0 and p.inputs["predicted_split"] > 0
    assert p.inputs["m_rule"] == "explicit"


def test_divergence_trend():
    assert divergence_trend(4, [2]) == pytest.approx([2 * (1 / 5) * (3 / 7) * (7 / 11)])
    small, large = divergence_trend(4, [10**3, 10**6])
    assert large > small
    vals = divergence_trend(4, [2**j for j in range(10, 21)])
    assert all(b > a for a, b in zip(vals, vals[1:]))
    with pytest.raises(DomainError):
        divergence_trend(2, [10])
    with pytest.raises(DomainError):
        divergence_trend(4, [10, 5])

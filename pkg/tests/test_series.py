import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bohrlab import series as S

from conftest import fft_coefficients


def test_moebius_plus_zero_is_identity():
    s = S.moebius_plus(0.0)
    np.testing.assert_allclose(s.coeffs[:4], [0, 1, 0, 0])


def test_moebius_plus_half_coefficients():
    s = S.moebius_plus(0.5)
    np.testing.assert_allclose(s.coeffs[:4], [0.5, 0.75, -0.375, 0.1875], atol=1e-15)
    oracle = fft_coefficients(lambda z: (0.5 + z) / (1 + 0.5 * z), 30)
    np.testing.assert_allclose(s.coeffs[:30], oracle, atol=1e-13)


def test_moebius_minus_coefficients():
    np.testing.assert_allclose(S.moebius_minus(0.0).coeffs[:3], [0, -1, 0])
    s = S.moebius_minus(0.5)
    np.testing.assert_allclose(s.coeffs[1:4], [-0.75, -0.375, -0.1875], atol=1e-15)
    oracle = fft_coefficients(lambda z: (0.5 - z) / (1 - 0.5 * z), 30)
    np.testing.assert_allclose(s.coeffs[:30], oracle, atol=1e-13)


@pytest.mark.parametrize("a", [-0.1, 1.0, 1.5])
def test_moebius_rejects_bad_parameter(a):
    with pytest.raises(ValueError):
        S.moebius_plus(a)


def test_evaluate_simple_series():
    c = S.constant(0.7)
    v = S.evaluate(c, 0.4 + 0.2j)
    assert v.value == pytest.approx(0.7)
    assert v.error_bound >= 0
    assert S.evaluate(S.identity(), 0.3).value == pytest.approx(0.3)


@pytest.mark.parametrize("a,w", [(0.3, 0.5), (0.9, -0.8), (0.99, 0.95)])
def test_evaluate_moebius_within_bound(a, w):
    v = S.evaluate(S.moebius_plus(a), w)
    exact = (a + w) / (1 + a * w)
    assert abs(v.value - exact) <= v.error_bound + 1e-14
    assert v.error_bound <= 1e-11


def test_evaluate_rejects_boundary():
    with pytest.raises(ValueError):
        S.evaluate(S.identity(), 1.0)


@pytest.mark.parametrize("a,w", [(0.2, 0.3), (0.8, -0.6), (0.5, 0.9)])
def test_derivative_moebius(a, w):
    d = S.deriv_over_factorial(S.moebius_plus(a), 1, w)
    assert abs(d.value - (1 - a * a) / (1 + a * w) ** 2) <= d.error_bound + 1e-13
    assert S.deriv_over_factorial(S.identity(), 1, w).value == pytest.approx(1.0)


def test_higher_derivative_moebius():
    # (a+z)/(1+az) has n-th coefficient (1-a^2)(-a)^(n-1)/(1+aw)^(n+1) around w
    a, w = 0.6, 0.25 - 0.1j
    for n in range(1, 8):
        d = S.deriv_over_factorial(S.moebius_plus(a), n, w)
        exact = (1 - a * a) * (-a) ** (n - 1) / (1 + a * w) ** (n + 1)
        assert abs(d.value - exact) <= d.error_bound + 1e-13


def geometric_oracle(a, r, terms=500):
    n = np.arange(1, terms)
    return (1 - a * a) * a ** (n - 1), r**n


@pytest.mark.parametrize("a,r", [(0.3, 0.2), (0.7, 0.5), (0.95, 0.8)])
def test_sums_for_moebius(a, r):
    s = S.moebius_plus(a)
    coef, powers = geometric_oracle(a, r)
    maj = S.majorant_sum(s, r, 1)
    assert maj.value == pytest.approx((1 - a * a) * r / (1 - a * r), abs=1e-12)
    assert maj.value == pytest.approx(np.sum(coef * powers), abs=1e-12)
    quad = S.quadratic_sum(s, r, 1)
    assert quad.value == pytest.approx((1 - a * a) ** 2 * r * r / (1 - a * a * r * r), abs=1e-12)
    area = S.area_sum(s, r)
    assert area.value == pytest.approx((1 - a * a) ** 2 * r * r / (1 - a * a * r * r) ** 2, abs=1e-12)
    n = np.arange(1, 500)
    assert area.value == pytest.approx(np.sum(n * coef**2 * powers**2), abs=1e-12)


def test_trivial_sums():
    one = S.constant(1.0)
    assert S.majorant_sum(one, 0.6, 0).value == pytest.approx(1.0)
    assert S.quadratic_sum(one, 0.6, 1).value == 0
    assert S.area_sum(one, 0.6).value == 0
    z = S.identity()
    assert S.quadratic_sum(z, 0.4, 1).value == pytest.approx(0.16)
    assert S.area_sum(z, 0.4).value == pytest.approx(0.16)


def test_refined_tail_identity():
    r = 0.4
    got = S.refined_tail(S.identity(), r, 2)
    assert got.value == pytest.approx((1 + r / (1 - r)) * r * r, rel=1e-13)
    assert got.value == pytest.approx(5 / 3 * 0.16, rel=1e-13)


def refined_tail_direct(coeffs, r, N):
    a0 = abs(coeffs[0])
    t = (N - 1) // 2
    mod = np.abs(coeffs)
    n = np.arange(len(coeffs))
    head = np.sum(mod[N:] * r ** n[N:])
    mid = np.sum(mod[1 : t + 1] ** 2) * r**N / (1 - r) if t > 0 else 0.0
    weight = 1 / (1 + a0) + r / (1 - r)
    return head + mid + weight * np.sum(mod[t + 1 :] ** 2 * r ** (2 * n[t + 1 :]))


@pytest.mark.parametrize("N", [1, 2, 3, 5, 8])
def test_refined_tail_direct_summation(N):
    coeffs = [0.3, 0.2j, -0.15, 0.1, 0.05 + 0.05j]
    f = S.from_coefficients(coeffs)
    got = S.refined_tail(f, 0.45, N)
    assert got.value == pytest.approx(refined_tail_direct(np.array(coeffs), 0.45, N), abs=1e-14)


def test_from_coefficients_certification():
    assert S.from_coefficients([0.5, 0.25, 0.25]).ball_certified
    assert not S.from_coefficients([0.5, 0.5, 0.5]).ball_certified
    with pytest.raises(ValueError):
        S.TruncatedSeries(np.array([0.9, 0.5]), ball_certified=True)


def test_sample_unit_ball_special_cases():
    one = S.sample_unit_ball(0, 0, scale=1.0, phase=0.0)
    np.testing.assert_allclose(one.coeffs[:3], [1, 0, 0])
    z = S.sample_unit_ball(0, 1, scale=1.0, phase=0.0, zeros=[0.0])
    np.testing.assert_allclose(z.coeffs[:3], [0, 1, 0], atol=1e-15)


def test_sample_unit_ball_deterministic():
    a = S.sample_unit_ball(17, 3)
    b = S.sample_unit_ball(17, 3)
    np.testing.assert_array_equal(a.coeffs, b.coeffs)


def test_regeneration_raises_order():
    s = S.moebius_plus(0.999)
    assert s.truncation_order == S.DEFAULT_ORDER
    v = S.majorant_sum(s, 0.99, 0)
    assert v.error_bound <= 1e-11


def test_tail_helpers():
    assert S.geometric_tail(0.5, 3) == pytest.approx(0.25)
    T = S.required_order(0.9)
    assert 0.9 ** (T + 1) / 0.1 <= S.TAIL_TOL or T == S.MAX_ORDER
    with pytest.raises(ValueError):
        S.CertifiedValue(1.0, -1e-3)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), degree=st.integers(0, 4))
def test_sampled_coefficients_obey_lemma(seed, degree):
    f = S.sample_unit_ball(seed, degree)
    a0 = f.a0
    assert a0 <= 1
    assert np.max(np.abs(f.coeffs[1:])) <= 1 - a0 * a0 + 1e-12


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), degree=st.integers(0, 4),
       r=st.floats(0.0, 0.95), n_start=st.integers(0, 6))
def test_majorant_sum_monotone_in_start(seed, degree, r, n_start):
    f = S.sample_unit_ball(seed, degree)
    a = S.majorant_sum(f, r, n_start)
    b = S.majorant_sum(f, r, n_start + 1)
    assert b.value <= a.value + 1e-15
    assert a.error_bound >= 0


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), degree=st.integers(0, 4),
       r=st.floats(0.01, 0.95), angle=st.floats(0, 2 * math.pi))
def test_sampled_evaluation_matches_product(seed, degree, r, angle):
    rng = np.random.default_rng(seed)
    zeros = S.sample_zeros(rng, degree)
    f = S.sample_unit_ball(seed, degree, zeros=zeros, scale=0.8, phase=0.3)
    z = r * np.exp(1j * angle)
    exact = 0.8 * np.exp(0.3j) * np.prod([(z - a) / (1 - np.conj(a) * z) for a in zeros])
    v = S.evaluate(f, z)
    assert abs(v.value - exact) <= v.error_bound + 1e-12

"""Radius equations against independently written, denominator-free forms."""

import math

import numpy as np
import pytest
from scipy.optimize import brentq

from bohrlab import radius as R
from bohrlab.radius import RadiusProblem


def cleared(family, m=1, p=1, k=1, N=1):
    """Polynomial forms of each equation, sign chosen negative near 0."""
    if family == R.TH1:
        return lambda r: (2 * r**p * (1 - r**k) + 2 * r ** (2 * k) * (1 + r**m) ** 2
                          - (1 - r ** (2 * m)) * (1 - r**k))
    if family == R.TH2:
        return lambda r: r ** (2 * k) * (1 + r**m) ** 2 - (1 - r ** (2 * m) - r**p) * (1 - r**k)
    if family == R.TH3:
        return lambda r: 2 * r ** (2 * k) - (1 - r ** (2 * m)) * (1 - r**k - r**m)
    if family == R.TH4:
        return lambda r: r ** (2 * k) - (1 - r ** (2 * m)) * (1 - r**k - r**m)
    if family == R.TH5:
        return lambda r: (2 * r**k * (1 - r**m) ** N - 2 * r ** (k * (N + 1))
                          - (1 + r**m) * (1 - r**m) ** N * (1 - r**k - r**m))
    if family == R.TH6:
        return lambda r: 3 * r**k - 1
    raise ValueError(family)


TABLE_CASES = [
    (R.TH1, dict(m=1, p=1, k=1), 0.280776),
    (R.TH1, dict(m=3, p=3, k=1), 0.441112),
    (R.TH1, dict(m=2, p=3, k=2), 0.567006),
    (R.TH1, dict(m=5, p=30, k=10), 0.88777),
    (R.TH1, dict(m=30, p=20, k=10), 0.914967),
    (R.TH2, dict(m=1, p=1, k=1), 0.385795),
    (R.TH2, dict(m=3, p=3, k=1), 0.535687),
    (R.TH2, dict(m=2, p=3, k=2), 0.640675),
    (R.TH2, dict(m=5, p=30, k=10), 0.906065),
    (R.TH2, dict(m=30, p=20, k=10), 0.936066),
    (R.TH3, dict(m=1, k=1), 0.355416),
    (R.TH3, dict(m=2, k=1), 0.430586),
    (R.TH3, dict(m=2, k=2), 0.596168),
    (R.TH3, dict(m=3, k=2), 0.633513),
    (R.TH3, dict(m=4, k=10), 0.869519),
    (R.TH3, dict(m=10, k=15), 0.924302),
    (R.TH4, dict(m=1, k=1), 0.403032),
    (R.TH4, dict(m=2, k=1), 0.49478),
    (R.TH4, dict(m=2, k=2), 0.634848),
    (R.TH4, dict(m=3, k=2), 0.676754),
    (R.TH4, dict(m=4, k=10), 0.880073),
    (R.TH4, dict(m=10, k=15), 0.931868),
]


@pytest.mark.parametrize("family,params,printed", TABLE_CASES)
def test_dense_grid_sign_change(family, params, printed):
    g = cleared(family, **params)
    grid = printed + np.arange(-10, 11) * 1e-6
    values = np.array([g(x) for x in grid])
    change = np.nonzero(np.diff(np.sign(values)))[0]
    assert len(change) == 1
    root = R.solve(family, **params)
    assert grid[change[0]] <= root <= grid[change[0] + 1]
    assert abs(root - printed) < 5e-6


@pytest.mark.parametrize("family,params,printed", TABLE_CASES)
def test_matches_brentq(family, params, printed):
    g = cleared(family, **params)
    ref = brentq(g, printed - 1e-3, printed + 1e-3, xtol=1e-15)
    assert abs(R.solve(family, **params) - ref) < 1e-12


@pytest.mark.parametrize("N", [1, 2, 3, 7])
@pytest.mark.parametrize("m,k", [(1, 1), (3, 1), (2, 2)])
def test_th5_against_brentq(m, k, N):
    g = cleared(R.TH5, m=m, k=k, N=N)
    root = R.solve(R.TH5, m=m, k=k, N=N)
    lo, hi = root - 1e-4, root + 1e-4
    assert g(lo) < 0 < g(hi)
    assert abs(root - brentq(g, lo, hi, xtol=1e-15)) < 1e-12


def test_closed_form_roots():
    assert R.solve(R.TH1) == pytest.approx((math.sqrt(17) - 3) / 4, abs=1e-12)
    assert R.solve(R.AUX_RMP, m=1, p=1) == pytest.approx(math.sqrt(2) - 1, abs=1e-12)
    assert R.solve(R.AUX_R2MP, m=1, p=1) == pytest.approx((math.sqrt(5) - 1) / 2, abs=1e-12)
    for k in range(1, 7):
        assert R.solve(R.AUX_RK, k=k) == pytest.approx(R.rk_closed_form(k), abs=1e-12)


def test_th2_matches_independent_quartic():
    quartic = brentq(lambda r: 1 - 2 * r - r**2 - r**3 - r**4, 0.1, 0.6, xtol=1e-15)
    assert abs(R.solve(R.TH2) - quartic) < 1e-10
    assert abs(R.solve(R.THMB_QUARTIC) - quartic) < 1e-12


def test_residual_examples():
    assert abs(R.residual(RadiusProblem(R.TH1), (math.sqrt(17) - 3) / 4)) < 1e-10
    assert R.residual(RadiusProblem(R.AUX_RK, k=3), 3 ** (-1 / 3)) == pytest.approx(0, abs=1e-15)
    assert abs(R.residual(RadiusProblem(R.TH4), 0.403032)) < 5e-6
    for fam in R.FAMILIES:
        assert R.residual(RadiusProblem(fam), 1e-6) == pytest.approx(-1, abs=1e-4)


def test_th5_coincides_with_other_forms():
    # with N = 1, k = 1, m = 2: 2r(1 - r^2) - 2r^2 - (1 - r^4)(1 - r - r^2) = 0
    r = R.solve(R.TH5, m=2, k=1, N=1)
    assert abs(2 * r * (1 - r**2) - 2 * r**2 - (1 - r**4) * (1 - r - r**2)) < 1e-12


def test_rogosinski_and_bohr_limits():
    assert abs(R.solve(R.TH5, m=50, k=1, N=1) - 0.5) < 0.01
    assert abs(R.solve(R.TH5, m=50, k=1, N=60) - 1 / 3) < 0.01


def test_th5_decreases_with_n():
    roots = [R.solve(R.TH5, m=3, k=1, N=N) for N in (1, 2, 4, 8)]
    assert all(a >= b - 1e-12 for a, b in zip(roots, roots[1:]))


def test_radius_ordering():
    # the squared first term only helps, and the Th3 sum is a weaker requirement than Th4
    for m, p, k in [(1, 1, 1), (3, 3, 1), (2, 3, 2)]:
        assert R.solve(R.TH1, m=m, p=p, k=k) < R.solve(R.TH2, m=m, p=p, k=k)
        assert R.solve(R.TH1, m=m, p=p, k=k) < R.solve(R.AUX_RMP, m=m, p=p)
    for m, k in [(1, 1), (2, 1), (3, 2)]:
        assert R.solve(R.TH3, m=m, k=k) < R.solve(R.TH4, m=m, k=k) < R.sum_ceiling(m, k)


def test_lambda_values():
    assert R.lambda_coeff(2, 1) == pytest.approx(800 / 81, abs=1e-12)
    assert R.lambda_coeff(1, 2) == pytest.approx(1 / 6, abs=1e-12)
    for k in range(1, 7):
        assert R.lambda_coeff(k, k) == pytest.approx(8 / 9, abs=1e-12)


def test_result_invariants():
    problem = RadiusProblem(R.TH3, m=2, k=1)
    res = R.smallest_positive_root(problem, 1e-12)
    lo, hi = res.bracket
    assert lo <= res.radius <= hi
    assert hi - lo <= 1e-12
    assert R.residual(problem, lo) < 0 < R.residual(problem, hi)
    assert res.residual < 1e-10
    assert res.iterations > 0


def test_errors():
    with pytest.raises(ValueError):
        RadiusProblem("th9")
    with pytest.raises(ValueError):
        RadiusProblem(R.TH1, m=0)
    with pytest.raises(ValueError):
        R.smallest_positive_root(RadiusProblem(R.TH1), tol=1e-16)
    with pytest.raises(R.DomainError):
        R.residual(RadiusProblem(R.TH3), 0.7)


@pytest.mark.parametrize("tid,count", [("1", 5), ("2", 5), ("3", 5), ("3p", 6), ("5", 6)])
def test_make_table(tid, count):
    rows = R.make_table(tid)
    assert len(rows) == count
    for row in rows:
        assert row["abs_diff"] < 5e-6
        if "aux_abs_diff" in row:
            assert row["aux_abs_diff"] < 5e-6


def test_make_table_rejects_unknown_id():
    with pytest.raises(ValueError):
        R.make_table("9")

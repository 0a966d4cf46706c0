import numpy as np
import pytest

from bohrlab import sharpness as SH
from bohrlab.radius import TABLE1, TABLE2, TABLE3, TABLE_R3, TABLE_R5, DomainError, RadiusProblem, solve


def table_problems():
    out = [RadiusProblem("th1", m, p, k) for (m, p, k), _, _ in TABLE1]
    out += [RadiusProblem("th2", m, p, k) for (m, p, k), _, _ in TABLE2]
    out += [RadiusProblem("th6", m=m, k=k) for (m, k), _, _ in TABLE3]
    out += [RadiusProblem("th3", m=m, k=k) for (m, k), _ in TABLE_R3]
    out += [RadiusProblem("th4", m=m, k=k) for (m, k), _ in TABLE_R5]
    out += [RadiusProblem("th5", m=m, k=k, N=N) for m, k, N in [(1, 1, 1), (2, 1, 3), (3, 2, 5)]]
    return out


@pytest.mark.parametrize("problem", table_problems(), ids=lambda p: p.label())
def test_sweep_brackets_each_radius(problem):
    below, above = SH.sharpness_sweep(problem)
    assert below.gap <= 1e-6
    assert above.gap > 0
    assert below.r < above.r


@pytest.mark.parametrize("problem", table_problems()[::3], ids=lambda p: p.label())
def test_limit_sign_on_each_side(problem):
    R = solve(problem.family, **problem.params)
    ceiling = SH.validity_ceiling(problem)
    for r in np.linspace(R * 0.05, R * (1 - 1e-6), 100):
        assert SH.limit_gap(problem, r) < 1e-12
    top = min(ceiling, 0.999) if ceiling < 1 else 0.999
    for r in np.linspace(R + 1e-6, R + 0.999 * (top - R), 100):
        assert SH.limit_gap(problem, r) > 0


@pytest.mark.parametrize("family", SH.SHARPNESS_FAMILIES)
def test_closed_form_approaches_limit(family):
    problem = RadiusProblem(family, 2, 3, 1, N=2)
    R = solve(family, **problem.params)
    for r in (0.5 * R, R, 0.5 * (R + SH.validity_ceiling(problem, 1 - 1e-4))):
        assert abs(SH.sharpness_factor(problem, 1 - 1e-4, r) - SH.limit_gap(problem, r)) < 1e-2


def test_limit_zero_at_table_rows():
    for (m, p, k), _, _ in TABLE1:
        problem = RadiusProblem("th1", m, p, k)
        assert abs(SH.limit_gap(problem, solve("th1", m=m, p=p, k=k))) < 1e-8
    for k in (1, 2, 3):
        problem = RadiusProblem("th6", m=1, k=k)
        assert abs(SH.limit_gap(problem, 3 ** (-1 / k))) < 1e-12


def test_corrected_squared_family_closed_form():
    # ((a - r^m)/(1 - a r^m))^2 + sum_{n>=2} (1-a^2) a^(n-1) r^(kn) / (1 - a r^m)^(n+1), summed directly
    a, r, m, k = 0.5, 0.3, 1, 1
    first = ((a - r**m) / (1 - a * r**m)) ** 2
    n = np.arange(2, 400)
    tail = np.sum((1 - a * a) * a ** (n - 1) * r ** (k * n) / (1 - a * r**m) ** (n + 1))
    gap = SH.closed_gap(RadiusProblem("th4", m=m, k=k), a, r)
    assert 1 + gap == pytest.approx(first + tail, abs=1e-14)


def test_region_checks():
    with pytest.raises(DomainError):
        SH.closed_gap(RadiusProblem("th3"), 0.2, 0.5)
    with pytest.raises(ValueError):
        SH.sharpness_sweep(RadiusProblem("th1"), a=0.5)
    with pytest.raises(ValueError):
        SH.closed_gap(RadiusProblem("aux-rk"), 0.5, 0.2)


def test_figure_sweep_marks_root():
    grid = np.arange(1, 1000) / 1000
    rows = SH.figure_sweep(RadiusProblem("th3", m=4, k=10), grid)
    roots = [row for row in rows if row.marker == "root"]
    assert len(roots) == 1
    assert roots[0].r - 1e-3 < 0.869519 <= roots[0].r
    assert rows[0].gap == pytest.approx(-1, abs=1e-2)
    assert all(row.a == 1.0 for row in rows)


def test_closed_form_sweep_skips_outside_region():
    rows = SH.closed_form_sweep(RadiusProblem("th3"), 0.5, [0.1, 0.3, 0.6, 0.9])
    assert [row.r for row in rows] == [0.1, 0.3]

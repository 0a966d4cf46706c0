"""Extremal Moebius functions: closed-form functionals, limits and sweeps.

For the ``(a + z)/(1 + a z)`` family (theorems th1, th2, th6) and the
``(a - z)/(1 - a z)`` family (th3, th5, th4) composed with monomial Schwarz
functions at ``z = r``, the left-hand side equals ``1 + prefactor(a, r) *
factor(a, r)``. ``closed_gap`` returns ``lhs - 1``; ``limit_gap`` is the
``a -> 1`` limit of ``factor`` and changes sign exactly at the sharp radius.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .radius import (
    AUX_R2MP,
    AUX_RMP,
    TH1,
    TH2,
    TH3,
    TH4,
    TH5,
    TH6,
    DomainError,
    RadiusProblem,
    lambda_coeff,
    residual,
    smallest_positive_root,
    solve,
    sum_ceiling,
)

SHARPNESS_FAMILIES = (TH1, TH2, TH6, TH3, TH5, TH4)
PLUS_FAMILIES = (TH1, TH2, TH6)
MINUS_FAMILIES = (TH3, TH5, TH4)

DEFAULT_A = 1 - 1e-4
DEFAULT_DELTA = 1e-2


@dataclass(frozen=True)
class SweepRecord:
    """One row of a sharpness or figure sweep.

    Figure rows carry ``a = 1.0`` to mark the ``a -> 1`` residual rather than a
    member of the extremal family.
    """

    a: float
    r: float
    lhs: float
    gap: float
    theorem: str
    params: Tuple[int, int, int, int]
    marker: str = ""

    def as_row(self) -> dict:
        m, p, k, N = self.params
        return {
            "theorem": self.theorem, "m": m, "p": p, "k": k, "N": N,
            "a": self.a, "r": self.r, "lhs": self.lhs, "gap": self.gap,
            "marker": self.marker,
        }


def _params(problem: RadiusProblem):
    return (problem.m, problem.p, problem.k, problem.N)


def _check_family(problem: RadiusProblem):
    if problem.family not in SHARPNESS_FAMILIES:
        raise ValueError(f"{problem.family!r} has no extremal-function construction")


def _check_region(problem: RadiusProblem, a: float, r: float):
    if not 0 <= a < 1:
        raise DomainError(f"a = {a} outside [0, 1)")
    if not 0 < r < 1:
        raise DomainError(f"r = {r} outside (0, 1)")
    if problem.family in MINUS_FAMILIES:
        m, k = problem.m, problem.k
        if not r**m < a:
            raise DomainError(f"closed form needs r^m < a (r={r}, m={m}, a={a})")
        if 1 - a * r**k - a * r**m <= 0:
            raise DomainError("closed form needs 1 - a r^k - a r^m > 0")


def sharpness_factor(problem: RadiusProblem, a: float, r: float,
                     lam: Optional[float] = None) -> float:
    """The bracketed factor multiplying ``1 - a`` (or ``1 - a^2``) in ``lhs - 1``."""
    _check_family(problem)
    _check_region(problem, a, r)
    m, p, k, N = _params(problem)
    fam = problem.family
    rm, rk = r**m, r**k
    if fam == TH1:
        return ((1 + a) * r**p / (1 + a * rm) ** 2
                + (1 + a) * a * rk * rk / (1 - a * rk)
                + (1 - a * a) * rk * rk / ((1 - a * rk) * (1 - rk))
                - (1 - rm) / (1 + a * rm))
    if fam == TH2:
        return (-(1 - rm * rm) / (1 + a * rm) ** 2
                + r**p / (1 + a * rm) ** 2
                + a * rk * rk / (1 - a * rk)
                + (1 + a * rk) / ((1 + a) * (1 - rk)) * (1 - a * a) * rk * rk / (1 - a * a * rk * rk))
    if fam == TH6:
        if lam is None:
            lam = lambda_coeff(m, k)
        return ((1 + a) * rk / (1 - a * rk)
                + (1 - a * a) * rk * rk / ((1 - rk) * (1 - a * rk))
                + (1 - a * a) * (1 + a) * lam * rm * rm / (1 - a * a * rm * rm) ** 2
                - 1)
    if fam == TH3:
        return -(1 + rm) + a * (1 + a) * rk * rk / ((1 - a * rm) * (1 - a * rk - a * rm))
    if fam == TH5:
        num = rk * (1 - a * rm) ** N - a**N * r ** (k * (N + 1))
        return -(1 + rm) + (1 + a) * num / ((1 - a * rm) ** N * (1 - a * rk - a * rm))
    # TH4: the (1 - r^{2m}) term comes from expanding ((a - r^m)/(1 - a r^m))^2
    return -(1 - rm * rm) + a * rk * rk / (1 - a * rk - a * rm)


def closed_gap(problem: RadiusProblem, a: float, r: float,
               lam: Optional[float] = None) -> float:
    """``lhs - 1`` for the extremal Moebius function, from its closed form."""
    factor = sharpness_factor(problem, a, r, lam)
    fam = problem.family
    rm = r**problem.m
    if fam in (TH1, TH6):
        return (1 - a) * factor
    if fam == TH2:
        return (1 - a * a) * factor
    if fam in (TH3, TH5):
        return (1 - a) * factor / (1 - a * rm)
    return (1 - a * a) * factor / (1 - a * rm) ** 2


def limit_gap(problem: RadiusProblem, r: float) -> float:
    """``lim_{a -> 1^-}`` of :func:`sharpness_factor`."""
    _check_family(problem)
    if not 0 < r < 1:
        raise DomainError(f"r = {r} outside (0, 1)")
    m, p, k, N = _params(problem)
    fam = problem.family
    rm, rk = r**m, r**k
    if fam in MINUS_FAMILIES and 1 - rk - rm <= 0:
        raise DomainError(f"r = {r} violates 1 - r^k - r^m > 0")
    if fam == TH1:
        return 2 * r**p / (1 + rm) ** 2 + 2 * rk * rk / (1 - rk) - (1 - rm) / (1 + rm)
    if fam == TH2:
        return (rm * rm + r**p - 1) / (1 + rm) ** 2 + rk * rk / (1 - rk)
    if fam == TH6:
        return 2 * rk / (1 - rk) - 1
    if fam == TH3:
        return -(1 + rm) + 2 * rk * rk / ((1 - rm) * (1 - rk - rm))
    if fam == TH5:
        return (1 + rm) / (1 - rm) * residual(problem, r)
    return -(1 - rm * rm) + rk * rk / (1 - rk - rm)


def validity_ceiling(problem: RadiusProblem, a: float = 1.0) -> float:
    """Upper end of the radii where the sharpness construction is evaluated."""
    _check_family(problem)
    m, p, k = problem.m, problem.p, problem.k
    if problem.family == TH1:
        return solve(AUX_RMP, m=m, p=p)
    if problem.family == TH2:
        return solve(AUX_R2MP, m=m, p=p)
    if problem.family == TH6:
        return 1.0
    return min(a ** (1.0 / m), sum_ceiling(m, k))


def sharpness_sweep(problem: RadiusProblem, a: float = DEFAULT_A,
                    delta: float = DEFAULT_DELTA) -> Tuple[SweepRecord, SweepRecord]:
    """Closed-form ``lhs`` at ``R - delta`` and at ``R + delta``.

    ``R + delta`` is pulled back to the midpoint of ``(R, ceiling)`` when it
    would leave the validity region.
    """
    _check_family(problem)
    if not 1 - 1e-3 <= a < 1:
        raise ValueError(f"a must lie in [1 - 1e-3, 1), got {a}")
    if delta <= 0:
        raise ValueError("delta must be positive")
    R = smallest_positive_root(problem).radius
    ceiling = validity_ceiling(problem, a)
    if R - delta <= 0 or R >= ceiling:
        raise DomainError(f"cannot place R -/+ delta inside the validity region (R={R}, delta={delta})")
    r_lo = R - delta
    r_hi = R + delta
    marker = ""
    if r_hi >= ceiling:
        r_hi = 0.5 * (R + ceiling)
        marker = "clamped"
    rows = []
    for r, tag in ((r_lo, "below"), (r_hi, "above" if not marker else "above,clamped")):
        gap = closed_gap(problem, a, r)
        rows.append(SweepRecord(a, r, 1 + gap, gap, problem.family, _params(problem), tag))
    return rows[0], rows[1]


def figure_sweep(problem: RadiusProblem, r_grid: Iterable[float]) -> List[SweepRecord]:
    """Residual of the radius equation over ``r_grid``.

    Points outside the equation's domain are skipped; the first row whose
    residual sign differs from its predecessor is marked ``root``.
    """
    rows: List[SweepRecord] = []
    prev = None
    for r in r_grid:
        try:
            res = residual(problem, float(r))
        except DomainError:
            continue
        marker = ""
        if prev is not None and (res >= 0) != (prev >= 0) and not any(x.marker for x in rows):
            marker = "root"
        rows.append(SweepRecord(1.0, float(r), 1 + res, res, problem.family, _params(problem), marker))
        prev = res
    return rows


def closed_form_sweep(problem: RadiusProblem, a: float, r_grid: Iterable[float]) -> List[SweepRecord]:
    """Closed-form ``lhs`` of the extremal function at fixed ``a`` over ``r_grid``."""
    rows = []
    for r in r_grid:
        try:
            gap = closed_gap(problem, a, float(r))
        except DomainError:
            continue
        rows.append(SweepRecord(a, float(r), 1 + gap, gap, problem.family, _params(problem)))
    return rows

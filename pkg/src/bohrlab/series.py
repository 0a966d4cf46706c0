"""Truncated Taylor series of functions in the unit ball of H-infinity.

Every infinite sum is computed as a finite sum over the stored coefficients
plus an analytic bound on the discarded tail, derived from ``|a_n| <= 1``.
Inequalities are then checked on ``value + error_bound``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import kernels

DEFAULT_ORDER = int(os.environ.get("BOHR_LAB_TRUNC", "512"))
MAX_ORDER = 1 << 15
TAIL_TOL = 1e-12
LEMMA_SLACK = 1e-12
EDGE_MARGIN = 1e-6


@dataclass(frozen=True)
class CertifiedValue:
    """A computed quantity together with a bound on its truncation error."""

    value: complex | float
    error_bound: float

    def __post_init__(self):
        if not self.error_bound >= 0:
            raise ValueError(f"error_bound must be nonnegative, got {self.error_bound}")

    @property
    def upper(self) -> float:
        """Certified upper bound on the modulus of the exact quantity."""
        return abs(self.value) + self.error_bound

    @property
    def lower(self) -> float:
        return max(abs(self.value) - self.error_bound, 0.0)


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients ``a_0 .. a_T`` of a power series.

    ``source``, when present, regenerates the coefficients to any order so the
    series can be extended until a requested tail bound is met.
    """

    coeffs: np.ndarray
    ball_certified: bool = False
    source: Optional[Callable[[int], np.ndarray]] = field(default=None, repr=False)

    def __post_init__(self):
        c = np.ascontiguousarray(self.coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.shape[0] < 2:
            raise ValueError("need a 1-D coefficient array with truncation order >= 1")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coeffs", c)
        if self.ball_certified:
            a0 = abs(c[0])
            if a0 > 1 + LEMMA_SLACK:
                raise ValueError(f"|a_0| = {a0} > 1 for a ball-certified series")
            worst = float(np.max(np.abs(c[1:])))
            if worst > 1 - a0 * a0 + LEMMA_SLACK:
                raise ValueError(
                    f"max |a_n| = {worst} exceeds 1 - |a_0|^2 = {1 - a0 * a0}; "
                    "not a unit-ball function"
                )

    @property
    def truncation_order(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def a0(self) -> float:
        return abs(self.coeffs[0])

    def with_order(self, order: int) -> "TruncatedSeries":
        """Return the series regenerated to at least ``order`` when possible."""
        if order <= self.truncation_order or self.source is None:
            return self
        return TruncatedSeries(self.source(order), self.ball_certified, self.source)

    def certified_for(self, x: float, tol: float = TAIL_TOL) -> "TruncatedSeries":
        """Extend so that ``x**(T+1) / (1 - x) <= tol`` if the source allows."""
        return self.with_order(required_order(x, tol))


def required_order(x: float, tol: float = TAIL_TOL) -> int:
    """Smallest order ``T >= DEFAULT_ORDER`` with ``x**(T+1)/(1-x) <= tol``."""
    if x <= 0:
        return DEFAULT_ORDER
    if x >= 1:
        raise ValueError("geometric tail diverges for x >= 1")
    need = math.log(tol * (1 - x)) / math.log(x) - 1
    return int(min(max(DEFAULT_ORDER, math.ceil(need)), MAX_ORDER))


def geometric_tail(x: float, start: int) -> float:
    """``sum_{n >= start} x**n`` for ``0 <= x < 1``."""
    if x == 0:
        return 1.0 if start == 0 else 0.0
    return x**start / (1 - x)


def _padded(values, order: int) -> np.ndarray:
    out = np.zeros(order + 1, dtype=np.complex128)
    n = min(len(values), order + 1)
    out[:n] = values[:n]
    return out


def from_coefficients(coeffs, ball_certified: Optional[bool] = None) -> TruncatedSeries:
    """Polynomial with the given coefficients (zero beyond them).

    Without an explicit flag the polynomial is certified only when
    ``sum |a_n| <= 1``, which is sufficient for sup-norm at most one.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    if coeffs.shape[0] < 2:
        coeffs = _padded(coeffs, 1)
    if ball_certified is None:
        ball_certified = bool(np.sum(np.abs(coeffs)) <= 1 + LEMMA_SLACK)
    return TruncatedSeries(
        _padded(coeffs, max(DEFAULT_ORDER, coeffs.shape[0] - 1)),
        ball_certified,
        lambda order: _padded(coeffs, order),
    )


def constant(c: complex) -> TruncatedSeries:
    return from_coefficients([c, 0.0])


def identity() -> TruncatedSeries:
    return from_coefficients([0.0, 1.0])


def _check_moebius_parameter(a):
    if not 0 <= a < 1:
        raise ValueError(f"Moebius parameter must lie in [0, 1), got {a}")


def _moebius_coeffs(a: float, sign: int, order: int) -> np.ndarray:
    n = np.arange(order + 1)
    out = np.empty(order + 1, dtype=np.complex128)
    out[0] = a
    base = -a if sign > 0 else a
    # 0.0**0 == 1 covers a = 0
    out[1:] = sign * (1 - a * a) * np.power(base, n[1:] - 1)
    return out


def moebius_plus(a: float, order: Optional[int] = None) -> TruncatedSeries:
    """Taylor series of ``(a + z) / (1 + a z)``: ``A_n = (1 - a^2)(-a)^(n-1)``."""
    _check_moebius_parameter(a)
    source = lambda T: _moebius_coeffs(a, 1, T)  # noqa: E731
    return TruncatedSeries(source(order or DEFAULT_ORDER), True, source)


def moebius_minus(a: float, order: Optional[int] = None) -> TruncatedSeries:
    """Taylor series of ``(a - z) / (1 - a z)``: ``A_n = -(1 - a^2) a^(n-1)``."""
    _check_moebius_parameter(a)
    source = lambda T: _moebius_coeffs(a, -1, T)  # noqa: E731
    return TruncatedSeries(source(order or DEFAULT_ORDER), True, source)


def _check_radius(r: float):
    if not 0 <= r < 1:
        raise ValueError(f"radius must lie in [0, 1), got {r}")


def _check_point(w: complex):
    if abs(w) > 1 - EDGE_MARGIN:
        raise ValueError(f"|w| = {abs(w)} too close to the unit circle; tail bound diverges")


def evaluate(s: TruncatedSeries, w: complex) -> CertifiedValue:
    """Value of the series at ``w`` with tail bound ``|w|^(T+1) / (1 - |w|)``."""
    _check_point(w)
    rho = abs(w)
    s = s.certified_for(rho)
    value = kernels.horner(s.coeffs, complex(w))
    return CertifiedValue(complex(value), geometric_tail(rho, s.truncation_order + 1))


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def derivative_tail_bound(order: int, n: int, rho: float) -> float:
    """Bound on ``sum_{j > T} C(j, n) rho^(j-n)``, the discarded part of f^(n)/n!.

    Term ratio ``(j+1)/(j+1-n) * rho`` decreases in ``j``, so the tail is
    dominated by a geometric series from ``j = T + 1``; ``inf`` if that ratio
    is not below one.
    """
    if rho == 0:
        return 0.0
    start = order + 1
    if start + 1 - n <= 0:
        return math.inf
    ratio = (start + 1) / (start + 1 - n) * rho
    if ratio >= 1:
        return math.inf
    log_first = _log_comb(start, n) + (start - n) * math.log(rho)
    return math.exp(log_first) / (1 - ratio)


def deriv_over_factorial(s: TruncatedSeries, n: int, w: complex) -> CertifiedValue:
    """``f^(n)(w) / n!`` computed from the truncated coefficients.

    Raises:
        ValueError: if ``n`` exceeds the truncation order, or the tail bound
            cannot be made finite.
    """
    if n < 1:
        raise ValueError("derivative order must be positive")
    _check_point(w)
    rho = abs(w)
    order = s.truncation_order
    while derivative_tail_bound(order, n, rho) > TAIL_TOL and order < MAX_ORDER:
        order = min(2 * order, MAX_ORDER)
    s = s.with_order(order)
    if n > s.truncation_order:
        raise ValueError(f"derivative order {n} exceeds truncation order {s.truncation_order}")
    bound = derivative_tail_bound(s.truncation_order, n, rho)
    if not math.isfinite(bound):
        raise ValueError("insufficient truncation for a finite derivative tail bound")
    value = kernels.taylor_shift(s.coeffs, complex(w), n + 1)[n]
    return CertifiedValue(complex(value), bound)


def shifted_coefficients(s: TruncatedSeries, w: complex, count: int) -> np.ndarray:
    """``f^(n)(w)/n!`` for ``n = 0 .. count-1`` from the stored coefficients."""
    return kernels.taylor_shift(s.coeffs, complex(w), count)


def majorant_sum(s: TruncatedSeries, r: float, n_start: int = 0) -> CertifiedValue:
    """``sum_{n >= n_start} |a_n| r^n``."""
    _check_radius(r)
    s = s.certified_for(r)
    T = s.truncation_order
    if n_start > T:
        return CertifiedValue(0.0, geometric_tail(r, n_start))
    n = np.arange(n_start, T + 1)
    value = float(np.sum(np.abs(s.coeffs[n_start:]) * r**n))
    return CertifiedValue(value, geometric_tail(r, max(T + 1, n_start)))


def quadratic_sum(s: TruncatedSeries, r: float, n_start: int = 1) -> CertifiedValue:
    """``sum_{n >= n_start} |a_n|^2 r^(2n)``."""
    _check_radius(r)
    x = r * r
    s = s.certified_for(x)
    T = s.truncation_order
    if n_start > T:
        return CertifiedValue(0.0, geometric_tail(x, n_start))
    n = np.arange(n_start, T + 1)
    value = float(np.sum(np.abs(s.coeffs[n_start:]) ** 2 * x**n))
    return CertifiedValue(value, geometric_tail(x, max(T + 1, n_start)))


def area_sum(s: TruncatedSeries, r: float) -> CertifiedValue:
    """Normalised area ``S_r / pi = sum_{n >= 1} n |a_n|^2 r^(2n)``."""
    _check_radius(r)
    x = r * r
    s = s.certified_for(x, TAIL_TOL * (1 - x))
    T = s.truncation_order
    n = np.arange(1, T + 1)
    value = float(np.sum(n * np.abs(s.coeffs[1:]) ** 2 * x**n))
    M = T + 1
    tail = x**M * (M - (M - 1) * x) / (1 - x) ** 2 if x > 0 else 0.0
    return CertifiedValue(value, tail)


def refined_tail(s: TruncatedSeries, r: float, N: int) -> CertifiedValue:
    """Majorant tail from ``N`` plus the weighted quadratic sums.

    With ``t = (N - 1) // 2`` this is::

        sum_{n>=N} |a_n| r^n + [t>0] sum_{n=1}^t |a_n|^2 r^N/(1-r)
            + (1/(1+|a_0|) + r/(1-r)) sum_{n>=t+1} |a_n|^2 r^(2n)

    which is at most ``(1 - |a_0|^2) r^N / (1 - r)`` for unit-ball functions.
    """
    if not s.ball_certified:
        raise ValueError("refined_tail requires a ball-certified series")
    if N < 1:
        raise ValueError("N must be a positive integer")
    _check_radius(r)
    t = (N - 1) // 2
    head = majorant_sum(s, r, N)
    value = head.value
    if t > 0:
        value += float(np.sum(np.abs(s.coeffs[1 : t + 1]) ** 2)) * r**N / (1 - r)
    weight = 1 / (1 + s.a0) + r / (1 - r)
    quad = quadratic_sum(s, r, t + 1)
    value += weight * quad.value
    return CertifiedValue(value, head.error_bound + weight * quad.error_bound)


def _blaschke_coeffs(zeros, scale: float, phase: float, order: int) -> np.ndarray:
    g = np.zeros(order + 1, dtype=np.complex128)
    g[0] = scale * np.exp(1j * phase)
    for alpha in zeros:
        g = kernels.blaschke_factor(g, complex(alpha))
    return np.asarray(g)


def blaschke_series(zeros, scale: float = 1.0, phase: float = 0.0,
                    order: Optional[int] = None) -> TruncatedSeries:
    """``scale * exp(i phase) * prod (z - alpha) / (1 - conj(alpha) z)``."""
    zeros = tuple(complex(z) for z in zeros)
    if any(abs(z) >= 1 for z in zeros):
        raise ValueError("Blaschke zeros must lie inside the unit disk")
    if not 0 <= scale <= 1:
        raise ValueError("scale must lie in [0, 1]")
    source = lambda T: _blaschke_coeffs(zeros, scale, phase, T)  # noqa: E731
    return TruncatedSeries(source(order or DEFAULT_ORDER), True, source)


def sample_zeros(rng: np.random.Generator, count: int, max_modulus: float = 0.8) -> np.ndarray:
    """Points uniform (by area) in the disk ``|alpha| <= max_modulus``."""
    radius = max_modulus * np.sqrt(rng.uniform(0, 1, count))
    angle = rng.uniform(0, 2 * np.pi, count)
    return radius * np.exp(1j * angle)


def sample_unit_ball(seed: int, blaschke_degree: int, order: Optional[int] = None, *,
                     scale: Optional[float] = None, phase: Optional[float] = None,
                     zeros=None) -> TruncatedSeries:
    """Random ``c e^{i theta} B(z)`` with ``B`` a Blaschke product of the given degree.

    Zeros are uniform in ``|alpha| <= 0.8``, ``c`` uniform in ``[0, 1]`` and
    ``theta`` uniform in ``[0, 2 pi)``. Keyword overrides pin any of them.
    """
    if blaschke_degree < 0:
        raise ValueError("blaschke_degree must be nonnegative")
    rng = np.random.default_rng(seed)
    drawn_zeros = sample_zeros(rng, blaschke_degree)
    drawn_scale = rng.uniform(0, 1)
    drawn_phase = rng.uniform(0, 2 * np.pi)
    return blaschke_series(
        drawn_zeros if zeros is None else zeros,
        drawn_scale if scale is None else scale,
        drawn_phase if phase is None else phase,
        order,
    )

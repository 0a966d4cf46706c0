"""Left-hand sides of the Bohr-type inequalities, as certified values.

The general functionals take a :class:`FunctionalInput` (a unit-ball series,
three Schwarz functions and an evaluation point ``z`` with ``|z| = r``).
``lhs_thmA``/``lhs_thmB``/``lhs_thmC`` are the one-variable classics, written
out independently so that the specialisation ``m = p = k = 1`` is a real check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels, schwarz
from .radius import DomainError, lambda_coeff
from .schwarz import SchwarzFn
from .series import (
    MAX_ORDER,
    TAIL_TOL,
    CertifiedValue,
    TruncatedSeries,
    area_sum,
    deriv_over_factorial,
    derivative_tail_bound,
    evaluate,
    majorant_sum,
    quadratic_sum,
    refined_tail,
    required_order,
    shifted_coefficients,
)

# derivative series stop once the Lemma-2 term bound drops below this
TERM_CUTOFF = 1e-14
MAX_TERMS = 20000


@dataclass(frozen=True)
class FunctionalInput:
    f: TruncatedSeries
    r: float
    omega_m: SchwarzFn = field(default_factory=lambda: schwarz.monomial(1))
    omega_p: SchwarzFn = field(default_factory=lambda: schwarz.monomial(1))
    omega_k: SchwarzFn = field(default_factory=lambda: schwarz.monomial(1))
    z: Optional[complex] = None

    def __post_init__(self):
        if not self.f.ball_certified:
            raise ValueError("f must be a ball-certified series (sup-norm at most 1)")
        if not 0 <= self.r < 1:
            raise ValueError(f"r must lie in [0, 1), got {self.r}")
        if self.z is None:
            object.__setattr__(self, "z", complex(self.r))
        elif abs(abs(self.z) - self.r) > 1e-12:
            raise ValueError(f"|z| = {abs(self.z)} does not match r = {self.r}")

    @classmethod
    def with_monomials(cls, f, r, m=1, p=1, k=1, z=None) -> "FunctionalInput":
        return cls(f, r, schwarz.monomial(m), schwarz.monomial(p), schwarz.monomial(k), z)

    @property
    def m(self) -> int:
        return self.omega_m.order

    @property
    def p(self) -> int:
        return self.omega_p.order

    @property
    def k(self) -> int:
        return self.omega_k.order


def _square(v: CertifiedValue) -> CertifiedValue:
    a = abs(v.value)
    return CertifiedValue(a * a, 2 * a * v.error_bound + v.error_bound**2)


def _require_sum_domain(inp: FunctionalInput):
    # the derivative majorant sums (r^k / (1 - r^m))^n
    if inp.r**inp.k + inp.r**inp.m >= 1:
        raise DomainError(
            f"r = {inp.r} violates r^k + r^m < 1 (m={inp.m}, k={inp.k})"
        )


def derivative_series(f: TruncatedSeries, w: complex, s: float, first: int,
                      last: Optional[int] = None) -> CertifiedValue:
    """``sum_{n=first}^{last} |f^(n)(w)/n!| s^n`` (``last=None`` for infinity).

    Infinite sums need ``|w| + s < 1``. They stop at the first ``n`` where the
    Lemma-2 bound ``(1-|f(w)|^2) q^n / (1+|w|)``, ``q = s/(1-|w|)``, falls
    below ``TERM_CUTOFF``; the rest of that geometric majorant is added to the
    error. Coefficient truncation contributes ``(|w|+s)^(T+1)/(1-|w|-s)``
    in total over all ``n``.
    """
    rho = abs(w)
    if first < 1:
        raise ValueError("first derivative index must be positive")
    if last is not None and last < first:
        return CertifiedValue(0.0, 0.0)
    combined = rho + s < 1
    if last is None and not combined:
        raise DomainError(f"|w| + s = {rho + s} >= 1; derivative series may diverge")

    lemma_tail = 0.0
    if last is None:
        fw = evaluate(f, w)
        coef = min(max(1 - fw.lower**2, 0.0), 1.0)
        q = s / (1 - rho)
        if coef == 0 or q == 0:
            n_max = first - 1
        else:
            need = math.log(TERM_CUTOFF * (1 + rho) / coef) / math.log(q)
            n_max = max(first - 1, math.ceil(need))
            lemma_tail = coef / (1 + rho) * q ** (n_max + 1) / (1 - q)
        if n_max > MAX_TERMS:
            raise DomainError("derivative series converges too slowly near the domain edge")
        last = n_max
    if last < first:
        return CertifiedValue(0.0, lemma_tail)

    if combined:
        order = max(required_order(rho + s), 2 * last)
        f = f.with_order(min(order, MAX_ORDER))
        T = f.truncation_order
        trunc = (rho + s) ** (T + 1) / (1 - rho - s)
    else:
        order = f.truncation_order
        while order < MAX_ORDER and derivative_tail_bound(order, last, rho) > TAIL_TOL:
            order = min(2 * order, MAX_ORDER)
        f = f.with_order(order)
        T = f.truncation_order
        trunc = sum(derivative_tail_bound(T, n, rho) * s**n for n in range(first, last + 1))
    if last > T:
        raise ValueError(f"derivative order {last} exceeds truncation order {T}")

    b = shifted_coefficients(f, w, last + 1)
    n = np.arange(first, last + 1)
    value = float(np.sum(np.abs(b[first:]) * s**n))
    if not math.isfinite(trunc):
        raise ValueError("insufficient truncation for a finite derivative tail bound")
    return CertifiedValue(value, trunc + lemma_tail)


def _composite(inp: FunctionalInput):
    z = inp.z
    return inp.omega_m(z), abs(inp.omega_p(z)), abs(inp.omega_k(z))


def lhs_th1(inp: FunctionalInput) -> CertifiedValue:
    """``|f(w_m)| + |w_p| |f'(w_m)| + refined tail at |w_k|`` (N = 2)."""
    w, wp, wk = _composite(inp)
    fv = evaluate(inp.f, w)
    fd = deriv_over_factorial(inp.f, 1, w)
    tail = refined_tail(inp.f, wk, 2)
    value = abs(fv.value) + wp * abs(fd.value) + tail.value
    return CertifiedValue(value, fv.error_bound + wp * fd.error_bound + tail.error_bound)


def lhs_th2(inp: FunctionalInput) -> CertifiedValue:
    """As :func:`lhs_th1` with ``|f(w_m)|^2`` as the first term."""
    w, wp, wk = _composite(inp)
    fv = _square(evaluate(inp.f, w))
    fd = deriv_over_factorial(inp.f, 1, w)
    tail = refined_tail(inp.f, wk, 2)
    value = fv.value + wp * abs(fd.value) + tail.value
    return CertifiedValue(value, fv.error_bound + wp * fd.error_bound + tail.error_bound)


def lhs_th6(inp: FunctionalInput, lam: Optional[float] = None) -> CertifiedValue:
    """Full majorant at ``|w_k|``, refined quadratic term, plus ``lam`` times the area sum at ``|w_m|``.

    ``lam`` defaults to the sharp weight ``lambda_coeff(m, k)``.
    """
    if lam is None:
        lam = lambda_coeff(inp.m, inp.k)
    if lam < 0:
        raise ValueError("lam must be nonnegative")
    w, _, wk = _composite(inp)
    tail = refined_tail(inp.f, wk, 1)
    area = area_sum(inp.f, abs(w))
    value = inp.f.a0 + tail.value + lam * area.value
    return CertifiedValue(value, tail.error_bound + lam * area.error_bound)


def lhs_th3(inp: FunctionalInput) -> CertifiedValue:
    """``|f(w_m)| + sum_{n>=2} |f^(n)(w_m)/n!| |w_k|^n``; needs ``r^k + r^m < 1``."""
    _require_sum_domain(inp)
    w, _, wk = _composite(inp)
    fv = evaluate(inp.f, w)
    series = derivative_series(inp.f, w, wk, 2)
    return CertifiedValue(abs(fv.value) + series.value, fv.error_bound + series.error_bound)


def lhs_th5(inp: FunctionalInput, N: int) -> CertifiedValue:
    """``|f(w_m)| + sum_{n=1}^{N} |f^(n)(w_m)/n!| |w_k|^n``."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    w, _, wk = _composite(inp)
    fv = evaluate(inp.f, w)
    series = derivative_series(inp.f, w, wk, 1, N)
    return CertifiedValue(abs(fv.value) + series.value, fv.error_bound + series.error_bound)


def lhs_th4(inp: FunctionalInput) -> CertifiedValue:
    """``|f(w_m)|^2 + sum_{n>=2} |f^(n)(w_m)/n!| |w_k|^n``; needs ``r^k + r^m < 1``."""
    _require_sum_domain(inp)
    w, _, wk = _composite(inp)
    fv = _square(evaluate(inp.f, w))
    series = derivative_series(inp.f, w, wk, 2)
    return CertifiedValue(fv.value + series.value, fv.error_bound + series.error_bound)


def _point(r: float, z):
    if z is None:
        return complex(r)
    if abs(abs(z) - r) > 1e-12:
        raise ValueError(f"|z| = {abs(z)} does not match r = {r}")
    return complex(z)


def _classic_tail(f: TruncatedSeries, r: float):
    weight = 1 / (1 + f.a0) + r / (1 - r)
    head = majorant_sum(f, r, 2)
    quad = quadratic_sum(f, r, 1)
    return head.value + weight * quad.value, head.error_bound + weight * quad.error_bound


def _require_ball(f: TruncatedSeries):
    if not f.ball_certified:
        raise ValueError("f must be a ball-certified series (sup-norm at most 1)")


def lhs_thmA(f: TruncatedSeries, r: float, z=None) -> CertifiedValue:
    _require_ball(f)
    z = _point(r, z)
    fv = evaluate(f, z)
    fd = deriv_over_factorial(f, 1, z)
    tail, tail_err = _classic_tail(f, r)
    return CertifiedValue(
        abs(fv.value) + r * abs(fd.value) + tail,
        fv.error_bound + r * fd.error_bound + tail_err,
    )


def lhs_thmB(f: TruncatedSeries, r: float, z=None) -> CertifiedValue:
    _require_ball(f)
    z = _point(r, z)
    fv = _square(evaluate(f, z))
    fd = deriv_over_factorial(f, 1, z)
    tail, tail_err = _classic_tail(f, r)
    return CertifiedValue(
        fv.value + r * abs(fd.value) + tail,
        fv.error_bound + r * fd.error_bound + tail_err,
    )


def lhs_thmC(f: TruncatedSeries, r: float) -> CertifiedValue:
    _require_ball(f)
    weight = 1 / (1 + f.a0) + r / (1 - r)
    full = majorant_sum(f, r, 0)
    quad = quadratic_sum(f, r, 1)
    area = area_sum(f, r)
    return CertifiedValue(
        full.value + weight * quad.value + 8 / 9 * area.value,
        full.error_bound + weight * quad.error_bound + 8 / 9 * area.error_bound,
    )


def bohr_rogosinski_sum(f: TruncatedSeries, z: complex, N: int) -> CertifiedValue:
    """``|f(z)| + sum_{n>=N} |a_n| |z|^n``."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    fv = evaluate(f, z)
    tail = majorant_sum(f, abs(z), N)
    return CertifiedValue(abs(fv.value) + tail.value, fv.error_bound + tail.error_bound)


def rogosinski_partial(f: TruncatedSeries, z: complex, N: int) -> float:
    """``|sum_{n<N} a_n z^n|``."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    f = f.with_order(N)
    if N > f.truncation_order + 1:
        raise ValueError(f"N = {N} exceeds the stored coefficients")
    return abs(kernels.horner(np.ascontiguousarray(f.coeffs[:N]), complex(z)))

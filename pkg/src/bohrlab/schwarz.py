"""Schwarz functions vanishing to order ``m`` at the origin (the class B_m)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .series import sample_zeros

MONOMIAL = "monomial"
SCALED = "scaled"
BLASCHKE = "blaschke"
VARIANTS = (MONOMIAL, SCALED, BLASCHKE)

MEMBERSHIP_SLACK = 1e-10


@dataclass(frozen=True)
class SchwarzFn:
    """One of ``z^m``, ``c z^m`` or ``e^{i phase} z^m prod (z - a)/(1 - conj(a) z)``.

    The fields are not validated here so that deliberately invalid objects can
    be built for testing :func:`verify_membership`; use the factory functions
    for checked construction.
    """

    order: int
    variant: str = MONOMIAL
    scale: complex = 1.0
    zeros: Tuple[complex, ...] = ()
    phase: float = 0.0

    def __call__(self, z: complex) -> complex:
        return evaluate(self, z)


def monomial(m: int) -> SchwarzFn:
    _check_order(m)
    return SchwarzFn(m)


def scaled_monomial(c: complex, m: int) -> SchwarzFn:
    _check_order(m)
    if c == 0 or abs(c) > 1:
        raise ValueError(f"scale must satisfy 0 < |c| <= 1, got {c}")
    return SchwarzFn(m, SCALED, complex(c))


def monomial_times_blaschke(m: int, zeros, phase: float = 0.0) -> SchwarzFn:
    _check_order(m)
    zeros = tuple(complex(a) for a in zeros)
    for a in zeros:
        # a zero at the origin would raise the vanishing order above m
        if a == 0 or abs(a) >= 1:
            raise ValueError(f"Blaschke zeros must satisfy 0 < |a| < 1, got {a}")
    return SchwarzFn(m, BLASCHKE, 1.0, zeros, float(phase))


def _check_order(m):
    if int(m) != m or m < 1:
        raise ValueError(f"vanishing order must be a positive integer, got {m}")


def evaluate(omega: SchwarzFn, z: complex) -> complex:
    if abs(z) >= 1:
        raise ValueError(f"Schwarz functions are evaluated inside the unit disk, |z| = {abs(z)}")
    z = complex(z)
    value = z**omega.order
    if omega.variant == SCALED:
        value *= omega.scale
    elif omega.variant == BLASCHKE:
        value *= np.exp(1j * omega.phase)
        for a in omega.zeros:
            value *= (z - a) / (1 - a.conjugate() * z)
    elif omega.variant != MONOMIAL:
        raise ValueError(f"unknown variant {omega.variant!r}")
    return complex(value)


def modulus_envelope(omega: SchwarzFn, r: float) -> float:
    """Sharp bound ``r^m`` for ``|omega(z)|`` on ``|z| = r``."""
    if not 0 <= r < 1:
        raise ValueError(f"radius must lie in [0, 1), got {r}")
    return r**omega.order


def membership_grid(grid_size: int, max_radius: float = 0.99) -> np.ndarray:
    """Radial-angular grid of about ``grid_size`` points in ``|z| <= max_radius``."""
    n_rad = max(int(np.sqrt(grid_size)), 1)
    n_ang = max(grid_size // n_rad, 1)
    radii = np.linspace(max_radius / n_rad, max_radius, n_rad)
    angles = np.linspace(0, 2 * np.pi, n_ang, endpoint=False)
    return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()


def verify_membership(omega: SchwarzFn, grid_size: int = 1000) -> bool:
    """True iff ``|omega(z)| <= |z|^m`` (plus slack) everywhere on the grid."""
    for z in membership_grid(grid_size):
        if abs(evaluate(omega, z)) > abs(z) ** omega.order + MEMBERSHIP_SLACK:
            return False
    return True


def sample_schwarz(rng: np.random.Generator, m: int, variant: str) -> SchwarzFn:
    """Random member of B_m of the requested variant."""
    if variant == MONOMIAL:
        return monomial(m)
    if variant == SCALED:
        radius = rng.uniform(0.05, 1.0)
        return scaled_monomial(radius * np.exp(1j * rng.uniform(0, 2 * np.pi)), m)
    if variant == BLASCHKE:
        count = int(rng.integers(1, 4))
        zeros = [a for a in sample_zeros(rng, count, 0.9) if a != 0]
        return monomial_times_blaschke(m, zeros, rng.uniform(0, 2 * np.pi))
    raise ValueError(f"unknown variant {variant!r}")

"""Sharp Bohr-type radii for bounded analytic functions and Schwarz functions."""

from .kernels import BACKEND
from .radius import (
    DomainError,
    NoRootError,
    RadiusProblem,
    RadiusResult,
    lambda_coeff,
    make_table,
    residual,
    rk_closed_form,
    smallest_positive_root,
)
from .series import (
    CertifiedValue,
    TruncatedSeries,
    moebius_minus,
    moebius_plus,
    sample_unit_ball,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CertifiedValue",
    "DomainError",
    "NoRootError",
    "RadiusProblem",
    "RadiusResult",
    "TruncatedSeries",
    "lambda_coeff",
    "make_table",
    "moebius_minus",
    "moebius_plus",
    "residual",
    "rk_closed_form",
    "sample_unit_ball",
    "smallest_positive_root",
]

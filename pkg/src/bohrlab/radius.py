"""Radius equations, a bracketing smallest-root finder and table reproduction."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

TH1 = "th1"
TH2 = "th2"
TH6 = "th6"
TH3 = "th3"
TH5 = "th5"
TH4 = "th4"
AUX_RMP = "aux-rmp"
AUX_R2MP = "aux-r2mp"
AUX_RK = "aux-rk"
THMB_QUARTIC = "thmb-quartic"

# integer parameters each family actually uses
FAMILY_PARAMS: Dict[str, Tuple[str, ...]] = {
    TH1: ("m", "p", "k"),
    TH2: ("m", "p", "k"),
    TH6: ("m", "k"),
    TH3: ("m", "k"),
    TH5: ("m", "k", "N"),
    TH4: ("m", "k"),
    AUX_RMP: ("m", "p"),
    AUX_R2MP: ("m", "p"),
    AUX_RK: ("k",),
    THMB_QUARTIC: (),
}
FAMILIES = tuple(FAMILY_PARAMS)

SCAN_START = 1e-6
SCAN_STEP = 1e-3
DEFAULT_TOL = 1e-13
MIN_TOL = 1e-14


class DomainError(ValueError):
    """The radius lies outside the region where an equation is defined."""


class NoRootError(RuntimeError):
    """No sign change was found inside the admissible domain."""


@dataclass(frozen=True)
class RadiusProblem:
    family: str
    m: int = 1
    p: int = 1
    k: int = 1
    N: int = 1

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        for name in ("m", "p", "k", "N"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(f"parameter {name} must be a positive integer, got {value}")

    @property
    def params(self) -> Dict[str, int]:
        return {name: getattr(self, name) for name in FAMILY_PARAMS[self.family]}

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({inner})"


@dataclass(frozen=True)
class RadiusResult:
    radius: float
    residual: float
    bracket: Tuple[float, float]
    iterations: int


def bisect_increasing(f: Callable[[float], float], lo: float, hi: float,
                      tol: float = 1e-15) -> float:
    """Root of a function with ``f(lo) < 0 < f(hi)``."""
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def sum_ceiling(m: int, k: int) -> float:
    """The root of ``r^k + r^m = 1`` in (0, 1)."""
    return bisect_increasing(lambda r: r**k + r**m - 1, 0.0, 1.0)


def domain_ceiling(problem: RadiusProblem) -> float:
    """Upper end of the open interval on which the family's equation is used."""
    if problem.family in (TH3, TH5, TH4):
        return sum_ceiling(problem.m, problem.k)
    return 1.0


def _check_domain(problem: RadiusProblem, r: float):
    if not 0 < r < 1:
        raise DomainError(f"r = {r} outside (0, 1)")
    if problem.family in (TH3, TH5, TH4):
        if 1 - r**problem.k - r**problem.m <= 0:
            raise DomainError(
                f"r = {r} violates 1 - r^k - r^m > 0 for {problem.label()}"
            )


def residual(problem: RadiusProblem, r: float) -> float:
    """Signed residual of the family's radius equation; negative near ``r = 0``."""
    _check_domain(problem, r)
    m, p, k, N = problem.m, problem.p, problem.k, problem.N
    fam = problem.family
    if fam == TH1:
        rm = r**m
        return 2 * r**p / (1 + rm) + 2 * r ** (2 * k) * (1 + rm) / (1 - r**k) - (1 - rm)
    if fam == TH2:
        rm = r**m
        return -(1 - rm * rm - r**p) / (1 + rm) ** 2 + r ** (2 * k) / (1 - r**k)
    if fam in (TH6, AUX_RK):
        return 3 * r**k - 1
    if fam == TH3:
        return 2 * r ** (2 * k) - (1 - r ** (2 * m)) * (1 - r**k - r**m)
    if fam == TH4:
        return r ** (2 * k) - (1 - r ** (2 * m)) * (1 - r**k - r**m)
    if fam == TH5:
        rm, rk = r**m, r**k
        num = 2 * rk * (1 - rm) ** N - 2 * r ** (k * (N + 1))
        den = (1 - rm) ** (N - 1) * (1 - rk - rm) * (1 + rm)
        return num / den - (1 - rm)
    if fam == AUX_RMP:
        return r ** (2 * m) + 2 * r**p - 1
    if fam == AUX_R2MP:
        return r ** (2 * m) + r**p - 1
    if fam == THMB_QUARTIC:
        return r**4 + r**3 + r**2 + 2 * r - 1
    raise ValueError(f"unknown family {fam!r}")


def smallest_positive_root(problem: RadiusProblem, tol: float = DEFAULT_TOL) -> RadiusResult:
    """First sign change of the residual, refined by bisection to width ``tol``.

    The residual is scanned from ``1e-6`` in steps of ``1e-3``, strictly below
    the family's domain ceiling.
    """
    if tol < MIN_TOL:
        raise ValueError(f"tol must be at least {MIN_TOL}")
    ceiling = domain_ceiling(problem)
    top = ceiling * (1 - 1e-12)

    def f(r):
        return residual(problem, r)

    lo = SCAN_START
    f_lo = f(lo)
    if f_lo == 0:
        return RadiusResult(lo, 0.0, (lo, lo), 0)
    hi = None
    i = 1
    while True:
        x = min(SCAN_START + i * SCAN_STEP, top)
        fx = f(x)
        if fx == 0 or (fx > 0) != (f_lo > 0):
            hi, f_hi = x, fx
            break
        if x >= top:
            break
        lo, f_lo = x, fx
        i += 1
    if hi is None:
        raise NoRootError(f"no sign change of {problem.label()} below {ceiling}")
    if f_hi == 0:
        return RadiusResult(hi, 0.0, (hi, hi), 0)

    lo_negative = f_lo < 0
    iterations = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        iterations += 1
        if fm == 0:
            return RadiusResult(mid, 0.0, (lo, hi), iterations)
        if (fm < 0) == lo_negative:
            lo = mid
        else:
            hi = mid
    radius = 0.5 * (lo + hi)
    return RadiusResult(radius, abs(f(radius)), (lo, hi), iterations)


def solve(family: str, tol: float = DEFAULT_TOL, **params) -> float:
    """Convenience wrapper returning only the radius."""
    return smallest_positive_root(RadiusProblem(family, **params), tol).radius


def rk_closed_form(k: int) -> float:
    """Root of ``3 r^k = 1``."""
    return 3.0 ** (-1.0 / k)


def lambda_coeff(m: int, k: int) -> float:
    """Sharp area-term weight ``(1 - r_k^{2m})^2 / (8 r_k^{2m})``."""
    x = rk_closed_form(k) ** (2 * m)
    return (1 - x) ** 2 / (8 * x)


_C3 = 3.0 ** (1.0 / 3.0)

# printed values; exact expressions where the tables give them
TABLE1 = [
    ((1, 1, 1), (math.sqrt(17) - 3) / 4, 0.414214),
    ((3, 3, 1), 0.441112, 0.745432),
    ((2, 3, 2), 0.567006, 0.716673),
    ((5, 30, 10), 0.88777, 0.948565),
    ((30, 20, 10), 0.914967, 0.961223),
]
TABLE2 = [
    ((1, 1, 1), 0.385795, 0.618034),
    ((3, 3, 1), 0.535687, 0.8518),
    ((2, 3, 2), 0.640675, 0.819173),
    ((5, 30, 10), 0.906065, 0.962497),
    ((30, 20, 10), 0.936066, 0.981069),
]
TABLE3 = [
    ((2, 1), 1 / 3, 800 / 81),
    ((1, 2), 1 / math.sqrt(3), 1 / 6),
    ((2, 2), 1 / math.sqrt(3), 8 / 9),
    ((1, 3), 1 / _C3, (3 - _C3) ** 2 / (24 * _C3)),
    ((2, 3), 1 / _C3, (9 - _C3**2) ** 2 / (72 * _C3**2)),
]
TABLE_R3 = [
    ((1, 1), 0.355416),
    ((2, 1), 0.430586),
    ((2, 2), 0.596168),
    ((3, 2), 0.633513),
    ((4, 10), 0.869519),
    ((10, 15), 0.924302),
]
TABLE_R5 = [
    ((1, 1), 0.403032),
    ((2, 1), 0.49478),
    ((2, 2), 0.634848),
    ((3, 2), 0.676754),
    ((4, 10), 0.880073),
    ((10, 15), 0.931868),
]

TABLE_IDS = {"1": 1, "2": 2, "3": 3, "3p": 4, "4": 4, "5": 5}


def table_problems(table_id) -> List[RadiusProblem]:
    """Radius problems behind each table row (primary radius only)."""
    tid = TABLE_IDS[str(table_id)]
    if tid == 1:
        return [RadiusProblem(TH1, m, p, k) for (m, p, k), _, _ in TABLE1]
    if tid == 2:
        return [RadiusProblem(TH2, m, p, k) for (m, p, k), _, _ in TABLE2]
    if tid == 3:
        return [RadiusProblem(TH6, m=m, k=k) for (m, k), _, _ in TABLE3]
    if tid == 4:
        return [RadiusProblem(TH3, m=m, k=k) for (m, k), _ in TABLE_R3]
    return [RadiusProblem(TH4, m=m, k=k) for (m, k), _ in TABLE_R5]


def make_table(table_id, tol: float = DEFAULT_TOL) -> List[dict]:
    """Rows of one of the paper's tables with freshly computed radii.

    Every row is a flat dict: the integer parameters, then ``radius``,
    ``reference_value``, ``abs_diff``; tables with a second quantity add
    ``aux_value``, ``aux_reference_value``, ``aux_abs_diff`` (``r_{m,p}``,
    ``r_{2,m,p}`` or the area weight).
    """
    key = str(table_id)
    if key not in TABLE_IDS:
        raise ValueError(f"unknown table id {table_id!r}; expected one of {sorted(TABLE_IDS)}")
    tid = TABLE_IDS[key]
    rows = []
    if tid in (1, 2):
        data = TABLE1 if tid == 1 else TABLE2
        family, aux_family = (TH1, AUX_RMP) if tid == 1 else (TH2, AUX_R2MP)
        for (m, p, k), ref, aux_ref in data:
            radius = solve(family, tol, m=m, p=p, k=k)
            aux = solve(aux_family, tol, m=m, p=p)
            rows.append(_row({"m": m, "p": p, "k": k}, radius, ref, aux, aux_ref))
    elif tid == 3:
        for (m, k), ref, aux_ref in TABLE3:
            radius = solve(TH6, tol, m=m, k=k)
            rows.append(_row({"m": m, "k": k}, radius, ref, lambda_coeff(m, k), aux_ref))
    else:
        data = TABLE_R3 if tid == 4 else TABLE_R5
        family = TH3 if tid == 4 else TH4
        for (m, k), ref in data:
            rows.append(_row({"m": m, "k": k}, solve(family, tol, m=m, k=k), ref))
    return rows


def _row(params, radius, ref, aux=None, aux_ref=None) -> dict:
    row = dict(params)
    row.update(radius=radius, reference_value=ref, abs_diff=abs(radius - ref))
    if aux is not None:
        row.update(aux_value=aux, aux_reference_value=aux_ref, aux_abs_diff=abs(aux - aux_ref))
    return row

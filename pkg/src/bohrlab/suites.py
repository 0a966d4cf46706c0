"""Randomised checks of the inequalities below their sharp radii."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Sequence

import numpy as np

from . import functionals as F
from . import schwarz
from .radius import TH1, TH2, TH3, TH4, TH5, TH6, RadiusProblem, smallest_positive_root
from .series import TruncatedSeries, constant, identity, sample_unit_ball

INEQUALITY_SLACK = 1e-9
MAX_SAMPLE_DEGREE = 4


def functional_for(problem: RadiusProblem) -> Callable[[F.FunctionalInput], F.CertifiedValue]:
    fam = problem.family
    if fam == TH1:
        return F.lhs_th1
    if fam == TH2:
        return F.lhs_th2
    if fam == TH6:
        return F.lhs_th6
    if fam == TH3:
        return F.lhs_th3
    if fam == TH5:
        return lambda inp: F.lhs_th5(inp, problem.N)
    if fam == TH4:
        return F.lhs_th4
    raise ValueError(f"{fam!r} is not an inequality family")


def sample_functions(samples: int, seed: int) -> List[TruncatedSeries]:
    """``samples`` random unit-ball functions; Blaschke degree cycles 0..4."""
    seeds = np.random.default_rng(seed).integers(0, 2**63 - 1, size=samples)
    return [sample_unit_ball(int(s), i % (MAX_SAMPLE_DEGREE + 1)) for i, s in enumerate(seeds)]


@dataclass
class SuiteResult:
    problem: RadiusProblem
    radius: float
    r: float
    evaluated: int = 0
    max_upper: float = 0.0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.evaluated > 0


def run_inequality_suite(problem: RadiusProblem, functions: Sequence[TruncatedSeries],
                         seed: int = 0, r_margin: float = 0.01,
                         variants: Sequence[str] = schwarz.VARIANTS) -> SuiteResult:
    """Check ``lhs + error <= 1 + 1e-9`` at ``r = (1 - r_margin) R``.

    Each function is paired with one random Schwarz triple per variant and a
    random point on ``|z| = r``.
    """
    if not 0 < r_margin < 1:
        raise ValueError("r_margin must lie in (0, 1)")
    radius = smallest_positive_root(problem).radius
    r = (1 - r_margin) * radius
    lhs = functional_for(problem)
    rng = np.random.default_rng(seed)
    result = SuiteResult(problem, radius, r)
    for i, f in enumerate(functions):
        for variant in variants:
            om = schwarz.sample_schwarz(rng, problem.m, variant)
            op = schwarz.sample_schwarz(rng, problem.p, variant)
            ok = schwarz.sample_schwarz(rng, problem.k, variant)
            z = r * np.exp(1j * rng.uniform(0, 2 * np.pi))
            value = lhs(F.FunctionalInput(f, r, om, op, ok, z))
            upper = value.value + value.error_bound
            result.evaluated += 1
            result.max_upper = max(result.max_upper, upper)
            if upper > 1 + INEQUALITY_SLACK:
                result.failures.append(f"sample {i} variant {variant}: lhs+err = {upper!r}")
    return result


def edge_functions() -> List[TruncatedSeries]:
    """Degenerate unit-ball inputs worth always including: ``f = 1`` and ``f = z``."""
    return [constant(1.0), identity()]

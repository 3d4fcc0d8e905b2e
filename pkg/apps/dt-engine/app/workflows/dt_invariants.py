"""
Refined DT invariants.

The invariant of a quiver for a discrete central charge is the ordered
product of quantum dilogarithms E(y^beta) over the stable classes in
decreasing phase order, computed in the truncated quantum affine space with
the quiver's skew form. check_independence compares it across charges.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence

from app.models.charge import CentralCharge
from app.models.quiver import Quiver
from app.models.run import GreenRun, SignedStep
from app.services.qseries import QSeries, qdilog, qs_eq, qs_inv, qs_mul, qs_one
from app.services.quiver_ops import lambda_matrix
from app.workflows.green_engine import (
    DEFAULT_BUDGET,
    NondiscreteCharge,
    run_mutation_method,
    stable_classes,
)
from app.utils.logger import get_logger, log_event

logger = get_logger(__name__)

DEFAULT_DEGREE = 8


class InvariantError(RuntimeError):
    pass


class InfiniteSpectrum(InvariantError):
    pass


# ---------------------------------------------------------------------
# Products
# ---------------------------------------------------------------------

def invariant_of_run(run: GreenRun, degree: int) -> QSeries:
    if not run.is_maximal:
        raise InfiniteSpectrum(
            f"mutation method did not finish within {run.length} steps; "
            "the ordered product is undefined"
        )
    quiver = run.quiver
    lam = lambda_matrix(quiver)
    result = qs_one(quiver.n, degree, lam)
    for beta in stable_classes(run):
        result = qs_mul(result, qdilog(quiver.n, degree, lam, beta))
    return result


def dt_invariant(
    quiver: Quiver,
    charge: CentralCharge,
    degree: int = DEFAULT_DEGREE,
    budget: int = DEFAULT_BUDGET,
) -> QSeries:
    run = run_mutation_method(quiver, charge, budget)
    return invariant_of_run(run, degree)


def steps_from_run(run: GreenRun) -> List[SignedStep]:
    return [SignedStep(stable_class=beta, sign=1) for beta in stable_classes(run)]


def keller_invariant(quiver: Quiver, steps: Sequence[SignedStep], degree: int) -> QSeries:
    """
    E(beta_1)^{e_1} ... E(beta_N)^{e_N}: a dilogarithm for each tilt at an
    object of the heart, its inverse for each tilt at a shifted object.
    """
    lam = lambda_matrix(quiver)
    result = qs_one(quiver.n, degree, lam)
    for step in steps:
        factor = qdilog(quiver.n, degree, lam, step.stable_class)
        if step.sign < 0:
            factor = qs_inv(factor)
        result = qs_mul(result, factor)
    return result


# ---------------------------------------------------------------------
# Charge independence
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class ChargeResult:
    charge_index: int
    status: str
    length: Optional[int] = None
    detail: Optional[str] = None
    series: Optional[QSeries] = None


@dataclass(frozen=True)
class Comparison:
    i: int
    j: int
    equal: bool


@dataclass(frozen=True)
class IndependenceReport:
    results: List[ChargeResult]
    comparisons: List[Comparison]

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.comparisons)


def _evaluate_charge(
    index: int,
    quiver: Quiver,
    charge: CentralCharge,
    degree: int,
    budget: int,
) -> ChargeResult:
    try:
        run = run_mutation_method(quiver, charge, budget)
    except NondiscreteCharge as exc:
        log_event(
            logger,
            "Charge skipped: not discrete",
            level=logging.WARNING,
            extra={"charge_index": index, "detail": str(exc)},
        )
        return ChargeResult(charge_index=index, status="nondiscrete", detail=str(exc))

    try:
        series = invariant_of_run(run, degree)
    except InfiniteSpectrum as exc:
        log_event(
            logger,
            "Charge skipped: spectrum not finite within budget",
            level=logging.WARNING,
            extra={"charge_index": index, "budget": budget},
        )
        return ChargeResult(
            charge_index=index,
            status="infinite",
            length=run.length,
            detail=str(exc),
        )
    return ChargeResult(charge_index=index, status="ok", length=run.length, series=series)


def check_independence(
    quiver: Quiver,
    charges: Sequence[CentralCharge],
    degree: int = DEFAULT_DEGREE,
    budget: int = DEFAULT_BUDGET,
) -> IndependenceReport:
    """
    Compute the invariant for each charge and compare every pair of
    successful results. Charge indices are 0-based positions in `charges`.
    """
    if len(charges) < 2:
        raise ValueError("check_independence needs at least two charges")

    results = [
        _evaluate_charge(index, quiver, charge, degree, budget)
        for index, charge in enumerate(charges)
    ]

    ok = [r for r in results if r.status == "ok"]
    comparisons = [
        Comparison(i=a.charge_index, j=b.charge_index, equal=qs_eq(a.series, b.series))
        for a, b in combinations(ok, 2)
    ]

    report = IndependenceReport(results=results, comparisons=comparisons)
    log_event(
        logger,
        "Charge independence check finished",
        extra={
            "charges": len(charges),
            "ok": len(ok),
            "comparisons": len(comparisons),
            "all_equal": report.all_equal,
            "degree": degree,
        },
    )
    return report

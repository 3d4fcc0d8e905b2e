"""
Seeded experiment drivers.

Randomized suites used by the `sweep` command and the acceptance tests:
random 2-acyclic quivers, random mutation walks checked for sign
coherence, and random-charge sweeps for charge independence. Every driver
takes an explicit random.Random so results are reproducible from a seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from app.models.charge import CentralCharge
from app.models.quiver import Quiver
from app.models.run import GreenRun
from app.services.central_charge import random_discrete_charge
from app.services.quiver_ops import (
    build_quiver,
    c_vector,
    frame,
    green_vertices,
    mutate,
    sign_coherent,
)
from app.workflows.dt_invariants import IndependenceReport, check_independence
from app.workflows.green_engine import NondiscreteCharge, run_mutation_method
from app.utils.logger import get_logger, log_event

logger = get_logger(__name__)


def random_quiver(n: int, max_mult: int, rng: random.Random) -> Quiver:
    """
    Each unordered pair gets no arrow, or 1..max_mult arrows in a random
    direction.
    """
    arrows = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            m = rng.randint(0, max_mult)
            if m:
                arrows.append((i, j, m) if rng.random() < 0.5 else (j, i, m))
    return build_quiver(n, arrows)


@dataclass(frozen=True)
class CoherenceViolation:
    quiver: Quiver
    sequence: Tuple[int, ...]
    vertex: int
    vector: Tuple[int, ...]


def random_walk_violations(
    quiver: Quiver,
    length: int,
    rng: random.Random,
    *,
    green_only: bool = True,
) -> List[CoherenceViolation]:
    """
    Mutate at random (green) vertices for up to `length` steps and report
    every c-vector that is zero or mixed-sign along the way.
    """
    state = frame(quiver)
    path: List[int] = []
    violations: List[CoherenceViolation] = []

    for _ in range(length + 1):
        for j in range(1, quiver.n + 1):
            c = c_vector(state, j)
            if not sign_coherent(c):
                violations.append(CoherenceViolation(quiver, tuple(path), j, c))
        if len(path) == length:
            break
        choices = sorted(green_vertices(state)) if green_only else list(range(1, quiver.n + 1))
        if not choices:
            break
        k = rng.choice(choices)
        path.append(k)
        state = mutate(state, k)

    return violations


def sign_coherence_sweep(
    samples: int,
    rng: random.Random,
    *,
    max_vertices: int = 4,
    max_mult: int = 2,
    max_len: int = 12,
    green_only: bool = True,
) -> List[CoherenceViolation]:
    violations: List[CoherenceViolation] = []
    for _ in range(samples):
        quiver = random_quiver(rng.randint(1, max_vertices), max_mult, rng)
        violations.extend(
            random_walk_violations(
                quiver,
                rng.randint(1, max_len),
                rng,
                green_only=green_only,
            )
        )
    log_event(
        logger,
        "Sign coherence sweep finished",
        extra={"samples": samples, "violations": len(violations)},
    )
    return violations


def random_charges(n: int, samples: int, rng: random.Random) -> List[CentralCharge]:
    return [random_discrete_charge(n, rng) for _ in range(samples)]


def charge_sweep(
    quiver: Quiver,
    samples: int,
    rng: random.Random,
    *,
    degree: int,
    budget: int,
) -> Tuple[List[CentralCharge], IndependenceReport]:
    charges = random_charges(quiver.n, max(samples, 2), rng)
    return charges, check_independence(quiver, charges, degree=degree, budget=budget)


def terminating_runs(
    quiver: Quiver,
    charges: Sequence[CentralCharge],
    budget: int,
) -> List[GreenRun]:
    """
    Runs for the charges that are discrete and reach the all-red state.
    """
    runs: List[GreenRun] = []
    for charge in charges:
        try:
            run = run_mutation_method(quiver, charge, budget)
        except NondiscreteCharge:
            continue
        if run.is_maximal:
            runs.append(run)
    return runs


def longest_run(
    quiver: Quiver,
    samples: int,
    rng: random.Random,
    budget: int,
) -> Optional[GreenRun]:
    runs = terminating_runs(quiver, random_charges(quiver.n, samples, rng), budget)
    return max(runs, key=lambda r: r.length, default=None)

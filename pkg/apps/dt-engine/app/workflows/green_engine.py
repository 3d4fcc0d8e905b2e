"""
Mutation method on the principal extension.

Tilting at the left-most simple of the current heart is realized as a
mutation of the framed quiver at the green vertex whose c-vector has the
largest phase. The c-vectors recorded along the way are the stable classes
in decreasing phase order; the run ends when every vertex is red.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Tuple

from app.models.charge import CentralCharge, RationalComplex
from app.models.quiver import ClassVector, DimensionMismatch, FramedQuiver, Quiver
from app.models.run import (
    EnumerationResult,
    GreenRun,
    GreenStep,
    RunStatus,
    SignedStep,
)
from app.services.central_charge import PhaseOrder, evaluate, phase_cmp, phase_float
from app.services.quiver_ops import (
    c_vector,
    frame,
    green_vertices,
    mutate,
    mutate_sequence,
    principal_part,
    sign_coherent,
)
from app.utils.logger import get_logger, log_event

logger = get_logger(__name__)

DEFAULT_BUDGET = 1000

Permutation = Tuple[int, ...]


# ---------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------

class EngineError(RuntimeError):
    pass


class NondiscreteCharge(EngineError):
    pass


class BudgetExceeded(EngineError):
    pass


class SelfDualityViolated(EngineError):
    pass


class NotMaximal(EngineError):
    pass


class PhaseOrderViolated(EngineError):
    pass


class SignCoherenceViolated(EngineError):
    pass


# ---------------------------------------------------------------------
# Mutation method
# ---------------------------------------------------------------------

def _check_sandwich(state: FramedQuiver) -> None:
    for j in range(1, state.n + 1):
        c = c_vector(state, j)
        if not sign_coherent(c):
            raise SignCoherenceViolated(
                f"c-vector of vertex {j} is {c}: neither >= 0 nor <= 0"
            )


def _select_left_most(
    state: FramedQuiver,
    charge: CentralCharge,
    greens: Sequence[int],
) -> Tuple[int, ClassVector, RationalComplex]:
    best: Optional[Tuple[int, ClassVector, RationalComplex]] = None
    rival: Optional[ClassVector] = None

    for j in greens:
        c = c_vector(state, j)
        w = evaluate(charge, c)
        if best is None:
            best = (j, c, w)
            continue
        order = phase_cmp(w, best[2])
        if order is PhaseOrder.GREATER:
            best = (j, c, w)
            rival = None
        elif order is PhaseOrder.EQUAL:
            rival = c

    assert best is not None
    if rival is not None:
        raise NondiscreteCharge(
            f"classes {best[1]} and {rival} tie for the largest phase"
        )
    return best


def run_mutation_method(
    quiver: Quiver,
    charge: CentralCharge,
    budget: int = DEFAULT_BUDGET,
) -> GreenRun:
    """
    Run the mutation method from frame(quiver) for at most `budget` steps.
    """
    if charge.n != quiver.n:
        raise DimensionMismatch(
            f"charge has rank {charge.n} but the quiver has {quiver.n} vertices"
        )
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")

    state = frame(quiver)
    steps: List[GreenStep] = []
    previous: Optional[RationalComplex] = None
    status = RunStatus.MAXIMAL_REACHED

    while True:
        greens = sorted(green_vertices(state))
        if not greens:
            break
        if len(steps) >= budget:
            status = RunStatus.BUDGET_EXCEEDED
            break

        vertex, stable_class, value = _select_left_most(state, charge, greens)

        if previous is not None:
            order = phase_cmp(value, previous)
            if order is PhaseOrder.EQUAL:
                raise NondiscreteCharge(
                    f"class {stable_class} has the same phase as step {len(steps)}"
                )
            if order is PhaseOrder.GREATER:
                raise PhaseOrderViolated(
                    f"class {stable_class} at step {len(steps) + 1} has a larger "
                    f"phase than its predecessor"
                )

        steps.append(
            GreenStep(
                vertex=vertex,
                stable_class=stable_class,
                phase_display=phase_float(value),
            )
        )
        log_event(
            logger,
            "Green mutation",
            level=logging.DEBUG,
            extra={"step": len(steps), "vertex": vertex, "class": stable_class},
        )

        state = mutate(state, vertex)
        _check_sandwich(state)
        previous = value

    run = GreenRun(
        quiver=quiver,
        charge=charge,
        steps=tuple(steps),
        status=status,
        final=state,
    )

    log_event(
        logger,
        "Mutation method finished",
        level=logging.WARNING if status is RunStatus.BUDGET_EXCEEDED else logging.INFO,
        extra={"status": status.value, "length": run.length, "budget": budget},
    )
    return run


def stable_classes(run: GreenRun) -> List[ClassVector]:
    return [step.stable_class for step in run.steps]


# ---------------------------------------------------------------------
# Self-duality
# ---------------------------------------------------------------------

def self_duality_check(run: GreenRun) -> Permutation:
    """
    Final c-vectors are c_j = -e_{pi(j)} and the principal part of the
    final quiver is the original quiver relabeled by the same pi.
    """
    if not run.is_maximal:
        raise NotMaximal("self-duality is only defined for maximal runs")

    final = run.final
    n = final.n
    images: List[int] = []
    for j in range(1, n + 1):
        c = c_vector(final, j)
        support = [i for i, x in enumerate(c, start=1) if x]
        if len(support) != 1 or c[support[0] - 1] != -1:
            raise SelfDualityViolated(
                f"final c-vector of vertex {j} is {c}, not a negative basis vector"
            )
        images.append(support[0])

    perm = tuple(images)
    if sorted(perm) != list(range(1, n + 1)):
        raise SelfDualityViolated(f"final c-vectors do not define a permutation: {list(perm)}")

    core = principal_part(final)
    for i in range(n):
        for j in range(n):
            if core.mult[i][j] != run.quiver.mult[perm[i] - 1][perm[j] - 1]:
                raise SelfDualityViolated(
                    f"final arrow count {i + 1}->{j + 1} is {core.mult[i][j]}, "
                    f"original {perm[i]}->{perm[j]} is "
                    f"{run.quiver.mult[perm[i] - 1][perm[j] - 1]}"
                )
    return perm


# ---------------------------------------------------------------------
# Arbitrary sequences
# ---------------------------------------------------------------------

def replay(quiver: Quiver, vertices: Sequence[int]) -> FramedQuiver:
    return mutate_sequence(frame(quiver), vertices)


def signed_steps(quiver: Quiver, vertices: Sequence[int]) -> List[SignedStep]:
    """
    Class and sign of every tilt along a mutation sequence: a green vertex
    tilts at an object of the original heart (+1), a red one at an object
    of its shift (-1).
    """
    state = frame(quiver)
    out: List[SignedStep] = []
    for k in vertices:
        c = c_vector(state, k)
        sign = 1 if all(x >= 0 for x in c) else -1
        out.append(SignedStep(stable_class=tuple(sign * x for x in c), sign=sign))
        state = mutate(state, k)
    return out


# ---------------------------------------------------------------------
# Maximal green sequence enumeration
# ---------------------------------------------------------------------

def enumerate_mgs(quiver: Quiver, max_len: int, node_budget: int) -> EnumerationResult:
    """
    Depth-first search over green mutations from frame(quiver). Every
    sequence of length <= max_len ending all-red is returned, sorted
    lexicographically. The search stops early, with partial=True, once more
    than node_budget framed states have been expanded.
    """
    if max_len < 1 or node_budget < 1:
        raise ValueError("max_len and node_budget must be >= 1")

    found: List[Tuple[int, ...]] = []
    stack: List[Tuple[FramedQuiver, Tuple[int, ...]]] = [(frame(quiver), ())]
    visited = 0
    partial = False

    while stack:
        state, path = stack.pop()
        visited += 1
        if visited > node_budget:
            partial = True
            visited -= 1
            break

        greens = sorted(green_vertices(state))
        if not greens:
            found.append(path)
            continue
        if len(path) >= max_len:
            continue
        for k in reversed(greens):
            stack.append((mutate(state, k), path + (k,)))

    found.sort()
    log_event(
        logger,
        "Maximal green sequence search finished",
        level=logging.WARNING if partial else logging.INFO,
        extra={
            "sequences": len(found),
            "nodes_visited": visited,
            "partial": partial,
            "max_len": max_len,
        },
    )
    return EnumerationResult(sequences=tuple(found), partial=partial, nodes_visited=visited)

"""
Independent ground truth for the engine.

For linearly oriented A_n the indecomposables are the interval modules
[lo, hi], and the proper subobjects relevant for stability are the prefix
intervals [lo, k], lo <= k < hi. An interval is stable when every prefix
has strictly smaller phase. The Kronecker pattern lists the classes the
engine meets on the divergent side.
"""

from __future__ import annotations

from typing import List

from app.models.charge import CentralCharge
from app.models.quiver import ClassVector, DimensionMismatch
from app.services.central_charge import PhaseOrder, evaluate, phase_cmp, phase_sort_key


class OracleError(RuntimeError):
    pass


class PhaseTie(OracleError):
    pass


def interval_class(n: int, lo: int, hi: int) -> ClassVector:
    if not 1 <= lo <= hi <= n:
        raise ValueError(f"[{lo}, {hi}] is not an interval of 1..{n}")
    return tuple(1 if lo <= i <= hi else 0 for i in range(1, n + 1))


def interval_classes(n: int) -> List[ClassVector]:
    return [
        interval_class(n, lo, hi)
        for lo in range(1, n + 1)
        for hi in range(lo, n + 1)
    ]


def interval_stables_An(n: int, charge: CentralCharge) -> List[ClassVector]:
    """
    Stable intervals of linear A_n in strictly decreasing phase order.
    """
    if charge.n != n:
        raise DimensionMismatch(f"charge has rank {charge.n}, expected {n}")

    stables: List[ClassVector] = []
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            whole = evaluate(charge, interval_class(n, lo, hi))
            if all(
                phase_cmp(evaluate(charge, interval_class(n, lo, k)), whole) is PhaseOrder.LESS
                for k in range(lo, hi)
            ):
                stables.append(interval_class(n, lo, hi))

    stables.sort(key=phase_sort_key(charge), reverse=True)

    for a, b in zip(stables, stables[1:]):
        if phase_cmp(evaluate(charge, a), evaluate(charge, b)) is PhaseOrder.EQUAL:
            raise PhaseTie(f"stable classes {a} and {b} have the same phase")
    return stables


def kronecker_pattern(k: int) -> List[ClassVector]:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return [(i, i + 1) for i in range(k)]

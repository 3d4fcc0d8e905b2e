"""
Central charge evaluation and exact phase comparison.

The phase of w in the half-plane is arg(w) / pi in (0, 1], with the
negative real axis at phase 1. Every comparison used for control flow is
an integer cross product; phase_float exists for display only.
"""

from __future__ import annotations

import math
import random
from enum import IntEnum
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, List, Sequence

from app.models.charge import (
    CentralCharge,
    ChargeError,
    OutOfHalfPlane,
    RationalComplex,
    ZERO,
    ZeroClass,
)
from app.models.quiver import ClassVector, DimensionMismatch, Quiver
from app.services.quiver_ops import topological_order

__all__ = [
    "ChargeError",
    "OutOfHalfPlane",
    "PhaseOrder",
    "ZeroClass",
    "all_roots_charge_An",
    "evaluate",
    "phase_cmp",
    "phase_float",
    "phase_sort_key",
    "random_discrete_charge",
    "simples_only_charge",
]


class PhaseOrder(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def evaluate(charge: CentralCharge, alpha: ClassVector) -> RationalComplex:
    if len(alpha) != charge.n:
        raise DimensionMismatch(
            f"class {tuple(alpha)} has length {len(alpha)}, charge has rank {charge.n}"
        )
    if not any(alpha):
        raise ZeroClass("the central charge is not evaluated on the zero class")
    if any(x < 0 for x in alpha):
        raise ChargeError(f"class {tuple(alpha)} has negative entries")

    total = ZERO
    for coefficient, value in zip(alpha, charge.z):
        if coefficient:
            total = total + value.scale(coefficient)
    return total


def _check_point(w: RationalComplex) -> None:
    if w.is_zero() or not w.in_half_plane():
        raise OutOfHalfPlane(f"{w} is not a nonzero point of the upper half-plane")


def phase_cmp(w1: RationalComplex, w2: RationalComplex) -> PhaseOrder:
    _check_point(w1)
    _check_point(w2)

    on_axis1 = w1.im == 0
    on_axis2 = w2.im == 0
    if on_axis1 and on_axis2:
        return PhaseOrder.EQUAL
    if on_axis1:
        return PhaseOrder.GREATER
    if on_axis2:
        return PhaseOrder.LESS

    cross = w2.re * w1.im - w1.re * w2.im
    if cross > 0:
        return PhaseOrder.GREATER
    if cross < 0:
        return PhaseOrder.LESS
    return PhaseOrder.EQUAL


def phase_float(w: RationalComplex) -> float:
    _check_point(w)
    return math.atan2(float(w.im), float(w.re)) / math.pi


def phase_sort_key(charge: CentralCharge) -> Callable[[ClassVector], object]:
    """
    Key for sorting classes by increasing exact phase.
    """

    def compare(a: ClassVector, b: ClassVector) -> int:
        return int(phase_cmp(evaluate(charge, a), evaluate(charge, b)))

    return cmp_to_key(compare)


# ---------------------------------------------------------------------
# Charge constructors
# ---------------------------------------------------------------------

def _decreasing_phases(order: Sequence[int], n: int) -> CentralCharge:
    z: List[RationalComplex] = [ZERO] * n
    for position, vertex in enumerate(order):
        z[vertex - 1] = RationalComplex(Fraction(2 * position - (n - 1)), Fraction(1))
    return CentralCharge(tuple(z))


def simples_only_charge(quiver: Quiver) -> CentralCharge:
    """
    Strictly decreasing phases along a topological order: the mutation
    method then tilts once at every simple and records nothing else.
    """
    return _decreasing_phases(topological_order(quiver), quiver.n)


def all_roots_charge_An(n: int) -> CentralCharge:
    """
    Phases strictly increasing along 1 -> 2 -> ... -> n, with z_i = (-2^i, 1).
    Every interval is stable; interval phases stay pairwise distinct for
    n <= 6.
    """
    if n < 1:
        raise ChargeError("rank must be >= 1")
    return CentralCharge(
        tuple(RationalComplex(Fraction(-(2 ** i)), Fraction(1)) for i in range(1, n + 1))
    )


def random_discrete_charge(n: int, rng: random.Random, spread: int = 60) -> CentralCharge:
    """
    Random rational charge with every z_i strictly above the real axis.
    Discreteness is not guaranteed; the engine rejects ties it meets.
    """
    z = []
    for _ in range(n):
        re = Fraction(rng.randint(-spread, spread), rng.randint(1, 17))
        im = Fraction(rng.randint(1, spread), rng.randint(1, 17))
        z.append(RationalComplex(re, im))
    return CentralCharge(tuple(z))

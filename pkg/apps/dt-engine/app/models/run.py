"""
Green run domain models.

A GreenRun is the transcript of one execution of the mutation method:
which vertex was mutated at each step, the class recorded there, and how
the run ended.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from app.models.charge import CentralCharge
from app.models.quiver import ClassVector, FramedQuiver, Quiver


class RunStatus(str, Enum):
    MAXIMAL_REACHED = "maximal"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class GreenStep:
    vertex: int
    stable_class: ClassVector
    phase_display: float


@dataclass(frozen=True)
class GreenRun:
    quiver: Quiver
    charge: CentralCharge
    steps: Tuple[GreenStep, ...]
    status: RunStatus
    final: FramedQuiver

    @property
    def vertices(self) -> List[int]:
        return [step.vertex for step in self.steps]

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def is_maximal(self) -> bool:
        return self.status is RunStatus.MAXIMAL_REACHED


@dataclass(frozen=True)
class SignedStep:
    """
    One factor of the ordered product: class beta >= 0 and sign +1 for an
    object of the original heart, -1 for one of its shift.
    """

    stable_class: ClassVector
    sign: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if not any(self.stable_class) or any(x < 0 for x in self.stable_class):
            raise ValueError(
                f"class must be nonzero and nonnegative, got {self.stable_class}"
            )


@dataclass(frozen=True)
class EnumerationResult:
    sequences: Tuple[Tuple[int, ...], ...]
    partial: bool
    nodes_visited: int

    @property
    def min_length(self) -> Optional[int]:
        return min((len(s) for s in self.sequences), default=None)

    @property
    def max_length(self) -> Optional[int]:
        return max((len(s) for s in self.sequences), default=None)

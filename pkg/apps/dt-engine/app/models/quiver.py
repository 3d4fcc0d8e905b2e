"""
Quiver domain models.

Quivers are stored as square matrices of arrow multiplicities:
mult[i][j] is the number of arrows i -> j. Indices inside the matrix are
0-based; every public API that takes a vertex uses the 1-based labels of
the diagrams (vertex i is row i - 1).

Used by:
- quiver operations (mutation, framing, c-vectors)
- the green engine and DT assembly
- file readers / canonical writers
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

ClassVector = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


# ---------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------

class QuiverError(ValueError):
    pass


class LoopArrow(QuiverError):
    pass


class TwoCycle(QuiverError):
    pass


class BadIndex(QuiverError):
    pass


class FrozenVertex(QuiverError):
    pass


class CyclicQuiver(QuiverError):
    pass


class DimensionMismatch(QuiverError):
    pass


# ---------------------------------------------------------------------
# Validation helpers
# ---------------------------------------------------------------------

def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _check_square(mult: Matrix, size: int) -> None:
    if len(mult) != size or any(len(row) != size for row in mult):
        raise DimensionMismatch(
            f"multiplicity matrix must be {size}x{size}"
        )


def _check_two_acyclic(mult: Matrix) -> None:
    size = len(mult)
    for i in range(size):
        if mult[i][i] != 0:
            raise LoopArrow(f"loop at vertex {i + 1}")
        for j in range(size):
            if mult[i][j] < 0:
                raise QuiverError(
                    f"negative multiplicity on arrow {i + 1}->{j + 1}"
                )
            if i < j and mult[i][j] and mult[j][i]:
                raise TwoCycle(
                    f"2-cycle between vertices {i + 1} and {j + 1}"
                )


def _arrow_list(mult: Matrix) -> List[Tuple[int, int, int]]:
    return [
        (i + 1, j + 1, m)
        for i, row in enumerate(mult)
        for j, m in enumerate(row)
        if m
    ]


# ---------------------------------------------------------------------
# Quiver
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class Quiver:
    """
    2-acyclic quiver on vertices 1..n.
    """

    n: int
    mult: Matrix

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BadIndex("a quiver needs at least one vertex")
        _check_square(self.mult, self.n)
        _check_two_acyclic(self.mult)

    def arrows(self) -> List[Tuple[int, int, int]]:
        """
        (source, target, multiplicity) triples sorted by (source, target).
        """
        return _arrow_list(self.mult)

    def arrow_count(self, source: int, target: int) -> int:
        return self.mult[source - 1][target - 1]

    def __str__(self) -> str:
        body = ", ".join(
            f"{i}->{j}" if m == 1 else f"{i}->{j}x{m}"
            for i, j, m in self.arrows()
        )
        return f"Quiver(n={self.n}, {{{body}}})"


# ---------------------------------------------------------------------
# Framed quiver
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class FramedQuiver:
    """
    Principal extension state: vertices 1..n mutable, n+1..2n frozen
    (frozen vertex i' is i + n). Arrows between two frozen vertices never
    exist.
    """

    n: int
    mult: Matrix

    def __post_init__(self) -> None:
        if self.n < 1:
            raise BadIndex("a framed quiver needs at least one mutable vertex")
        size = 2 * self.n
        _check_square(self.mult, size)
        _check_two_acyclic(self.mult)
        for i in range(self.n, size):
            for j in range(self.n, size):
                if self.mult[i][j]:
                    raise QuiverError(
                        f"arrow between frozen vertices {i + 1} and {j + 1}"
                    )

    def is_frozen(self, vertex: int) -> bool:
        return vertex > self.n

    def arrows(self) -> List[Tuple[int, int, int]]:
        return _arrow_list(self.mult)

    def __str__(self) -> str:
        def label(v: int) -> str:
            return f"{v - self.n}'" if v > self.n else str(v)

        body = ", ".join(
            f"{label(i)}->{label(j)}" if m == 1 else f"{label(i)}->{label(j)}x{m}"
            for i, j, m in self.arrows()
        )
        return f"FramedQuiver(n={self.n}, {{{body}}})"

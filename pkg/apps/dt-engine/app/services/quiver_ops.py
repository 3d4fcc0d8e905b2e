"""
Quiver operations.

Mutation, principal extension, c-vectors, green/red detection and the
bilinear forms on the class lattice. Every function is pure: inputs are
frozen models and a new model is returned.
"""

from __future__ import annotations

from graphlib import CycleError, TopologicalSorter
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Set, Tuple, TypeVar, Union

from app.models.quiver import (
    BadIndex,
    ClassVector,
    CyclicQuiver,
    DimensionMismatch,
    FramedQuiver,
    FrozenVertex,
    LoopArrow,
    Matrix,
    Quiver,
    QuiverError,
    TwoCycle,
    as_matrix,
)

__all__ = [
    "BadIndex",
    "CyclicQuiver",
    "DimensionMismatch",
    "FrozenVertex",
    "LoopArrow",
    "QuiverError",
    "TwoCycle",
    "all_red",
    "build_quiver",
    "c_matrix",
    "c_vector",
    "euler_form",
    "frame",
    "green_vertices",
    "is_acyclic",
    "iso_up_to_permutation",
    "kronecker",
    "lambda_form",
    "lambda_matrix",
    "linear_a",
    "mutate",
    "mutate_sequence",
    "oriented_cycle",
    "principal_part",
    "quiver_from_matrix",
    "relabel",
    "sign_coherent",
    "topological_order",
]

AnyQuiver = TypeVar("AnyQuiver", Quiver, FramedQuiver)
Permutation = Tuple[int, ...]


# ---------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------

def build_quiver(n: int, arrows: Iterable[Sequence[int]]) -> Quiver:
    """
    Build a quiver from (source, target[, multiplicity]) triples with 1-based
    labels. Repeated pairs accumulate.
    """
    if n < 1:
        raise BadIndex(f"vertex count must be >= 1, got {n}")

    mult = [[0] * n for _ in range(n)]
    for arrow in arrows:
        if len(arrow) not in (2, 3):
            raise QuiverError(f"arrow {list(arrow)} must be [source, target] or [source, target, m]")
        source, target = int(arrow[0]), int(arrow[1])
        m = int(arrow[2]) if len(arrow) == 3 else 1
        if not (1 <= source <= n and 1 <= target <= n):
            raise BadIndex(
                f"arrow {source}->{target}: vertex out of range 1..{n}"
            )
        if m < 1:
            raise QuiverError(f"arrow {source}->{target}: multiplicity must be >= 1, got {m}")
        if source == target:
            raise LoopArrow(f"arrow {source}->{target} is a loop")
        if mult[target - 1][source - 1]:
            raise TwoCycle(
                f"arrow {source}->{target} closes a 2-cycle with {target}->{source}"
            )
        mult[source - 1][target - 1] += m

    return Quiver(n=n, mult=as_matrix(mult))


def quiver_from_matrix(mult: Sequence[Sequence[int]]) -> Quiver:
    """Square non-negative integer matrix, mult[i][j] = arrows i+1 -> j+1."""
    rows = [list(row) for row in mult]
    if any(m < 0 for row in rows for m in row):
        raise QuiverError("arrow multiplicities must be >= 0")
    return Quiver(n=len(rows), mult=as_matrix(rows))


def linear_a(n: int) -> Quiver:
    """Linearly oriented A_n: 1 -> 2 -> ... -> n."""
    return build_quiver(n, [(i, i + 1) for i in range(1, n)])


def kronecker(arrows: int = 2) -> Quiver:
    return build_quiver(2, [(1, 2, arrows)])


def oriented_cycle(n: int) -> Quiver:
    """1 -> 2 -> ... -> n -> 1."""
    if n < 3:
        raise QuiverError("an oriented cycle without 2-cycles needs n >= 3")
    return build_quiver(n, [(i, i % n + 1) for i in range(1, n + 1)])


# ---------------------------------------------------------------------
# Mutation
# ---------------------------------------------------------------------

def _mutate_matrix(mult: Matrix, k: int, frozen_from: Optional[int]) -> Matrix:
    size = len(mult)
    out = [list(row) for row in mult]

    # compose through k
    for i in range(size):
        a = mult[i][k]
        if not a:
            continue
        for j in range(size):
            b = mult[k][j]
            if b:
                out[i][j] += a * b

    # reverse arrows at k
    for i in range(size):
        out[i][k], out[k][i] = mult[k][i], mult[i][k]

    # cancel 2-cycles
    for i in range(size):
        for j in range(i + 1, size):
            c = min(out[i][j], out[j][i])
            if c:
                out[i][j] -= c
                out[j][i] -= c

    if frozen_from is not None:
        for i in range(frozen_from, size):
            for j in range(frozen_from, size):
                out[i][j] = 0

    return as_matrix(out)


def mutate(quiver: AnyQuiver, k: int) -> AnyQuiver:
    """
    Mutate at the 1-based vertex k.
    """
    if isinstance(quiver, FramedQuiver):
        if k > quiver.n and k <= 2 * quiver.n:
            raise FrozenVertex(f"vertex {k} is frozen")
        if not 1 <= k <= quiver.n:
            raise BadIndex(f"vertex out of range: {k} not in 1..{quiver.n}")
        return FramedQuiver(
            n=quiver.n,
            mult=_mutate_matrix(quiver.mult, k - 1, frozen_from=quiver.n),
        )

    if not 1 <= k <= quiver.n:
        raise BadIndex(f"vertex out of range: {k} not in 1..{quiver.n}")
    return Quiver(n=quiver.n, mult=_mutate_matrix(quiver.mult, k - 1, frozen_from=None))


def mutate_sequence(quiver: AnyQuiver, vertices: Iterable[int]) -> AnyQuiver:
    for k in vertices:
        quiver = mutate(quiver, k)
    return quiver


# ---------------------------------------------------------------------
# Principal extension and c-vectors
# ---------------------------------------------------------------------

def frame(quiver: Quiver) -> FramedQuiver:
    n = quiver.n
    mult = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            mult[i][j] = quiver.mult[i][j]
        mult[i][i + n] = 1
    return FramedQuiver(n=n, mult=as_matrix(mult))


def _check_mutable(framed: FramedQuiver, j: int) -> None:
    if not 1 <= j <= framed.n:
        raise BadIndex(f"vertex {j} is not a mutable vertex of 1..{framed.n}")


def c_vector(framed: FramedQuiver, j: int) -> ClassVector:
    """
    Entry i is #(j -> i') - #(i' -> j).
    """
    _check_mutable(framed, j)
    n = framed.n
    row = framed.mult[j - 1]
    return tuple(
        row[i + n] - framed.mult[i + n][j - 1]
        for i in range(n)
    )


def c_matrix(framed: FramedQuiver) -> Matrix:
    """
    n x n matrix whose j-th column is c_vector(framed, j).
    """
    columns = [c_vector(framed, j) for j in range(1, framed.n + 1)]
    return tuple(
        tuple(columns[j][i] for j in range(framed.n))
        for i in range(framed.n)
    )


def green_vertices(framed: FramedQuiver) -> Set[int]:
    return {
        j
        for j in range(1, framed.n + 1)
        if all(x >= 0 for x in c_vector(framed, j))
    }


def all_red(framed: FramedQuiver) -> bool:
    return not green_vertices(framed)


def sign_coherent(vector: ClassVector) -> bool:
    if not any(vector):
        return False
    return all(x >= 0 for x in vector) or all(x <= 0 for x in vector)


# ---------------------------------------------------------------------
# Bilinear forms
# ---------------------------------------------------------------------

def _check_length(quiver: Quiver, *vectors: ClassVector) -> None:
    for vector in vectors:
        if len(vector) != quiver.n:
            raise DimensionMismatch(
                f"class vector {tuple(vector)} does not have length {quiver.n}"
            )


def lambda_matrix(quiver: Quiver) -> Matrix:
    n = quiver.n
    return tuple(
        tuple(quiver.mult[i][j] - quiver.mult[j][i] for j in range(n))
        for i in range(n)
    )


def lambda_form(quiver: Quiver, alpha: ClassVector, beta: ClassVector) -> int:
    """
    Skew form with lambda(e_i, e_j) = mult[i][j] - mult[j][i].
    """
    _check_length(quiver, alpha, beta)
    n = quiver.n
    return sum(
        alpha[i] * beta[j] * (quiver.mult[i][j] - quiver.mult[j][i])
        for i in range(n)
        if alpha[i]
        for j in range(n)
        if beta[j]
    )


def topological_order(quiver: Quiver) -> List[int]:
    """
    Vertices with every source before its targets; ties resolved by label.
    """
    sorter: TopologicalSorter = TopologicalSorter()
    for j in range(1, quiver.n + 1):
        sorter.add(j, *[i for i in range(1, quiver.n + 1) if quiver.arrow_count(i, j)])
    try:
        sorter.prepare()
    except CycleError as exc:
        raise CyclicQuiver(f"quiver has an oriented cycle through {exc.args[1]}") from exc

    order: List[int] = []
    while sorter.is_active():
        ready = sorted(sorter.get_ready())
        order.extend(ready)
        sorter.done(*ready)
    return order


def is_acyclic(quiver: Quiver) -> bool:
    try:
        topological_order(quiver)
    except CyclicQuiver:
        return False
    return True


def euler_form(quiver: Quiver, alpha: ClassVector, beta: ClassVector) -> int:
    """
    <alpha, beta> = sum_i alpha_i beta_i - sum_{i -> j} alpha_i beta_j.
    Only defined here for acyclic quivers.
    """
    _check_length(quiver, alpha, beta)
    if not is_acyclic(quiver):
        raise CyclicQuiver("the Euler form is only used for acyclic quivers")
    n = quiver.n
    diagonal = sum(alpha[i] * beta[i] for i in range(n))
    off = sum(
        alpha[i] * beta[j] * quiver.mult[i][j]
        for i in range(n)
        for j in range(n)
    )
    return diagonal - off


# ---------------------------------------------------------------------
# Principal part and isomorphism
# ---------------------------------------------------------------------

def principal_part(framed: FramedQuiver) -> Quiver:
    n = framed.n
    return Quiver(n=n, mult=tuple(row[:n] for row in framed.mult[:n]))


def relabel(quiver: Quiver, perm: Permutation) -> Quiver:
    """
    Move vertex i to perm(i): new mult[perm(i)][perm(j)] = mult[i][j].
    """
    _check_permutation(perm, quiver.n)
    n = quiver.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i] - 1][perm[j] - 1] = quiver.mult[i][j]
    return Quiver(n=n, mult=as_matrix(out))


def _check_permutation(perm: Permutation, n: int) -> None:
    if sorted(perm) != list(range(1, n + 1)):
        raise BadIndex(f"{list(perm)} is not a permutation of 1..{n}")


def iso_up_to_permutation(
    first: Union[Quiver, FramedQuiver],
    second: Quiver,
) -> Optional[Permutation]:
    """
    Return pi (1-based images, pi[i-1] = pi(i)) with
    first.mult[i][j] == second.mult[pi(i)][pi(j)], or None.
    Exhaustive search; permutations are tried in lexicographic order.
    """
    if isinstance(first, FramedQuiver):
        first = principal_part(first)
    if first.n != second.n:
        return None
    n = first.n

    if sorted(x for row in first.mult for x in row) != sorted(
        x for row in second.mult for x in row
    ):
        return None

    for candidate in permutations(range(n)):
        if all(
            first.mult[i][j] == second.mult[candidate[i]][candidate[j]]
            for i in range(n)
            for j in range(n)
        ):
            return tuple(p + 1 for p in candidate)
    return None

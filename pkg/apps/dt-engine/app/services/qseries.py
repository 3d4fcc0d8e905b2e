"""
Truncated quantum affine space.

Elements are finite sums of y^alpha (alpha >= 0, total degree <= D) with
coefficients in Q(v), multiplied by

    y^alpha * y^beta = v^lambda(alpha, beta) * y^(alpha + beta)

and truncated at total degree D. Dropping terms above D is compatible with
the product, so equality of truncations is a necessary condition for
equality in the completed algebra.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

from app.models.charge import ZeroClass
from app.models.quiver import ClassVector, Matrix, as_matrix
from app.services.laurent import (
    AlgebraError,
    HalfPowerPoly,
    ONE,
    ONE_POLY,
    RatFunc,
    ratfunc_sum,
    v_power,
)

__all__ = [
    "DegreeOverflow",
    "IncompatibleAlgebras",
    "NonUnitConstantTerm",
    "QSeries",
    "ZeroClass",
    "dilog_coefficient",
    "qdilog",
    "qs_eq",
    "qs_inv",
    "qs_monomial",
    "qs_mul",
    "qs_one",
    "qs_print",
    "qs_product",
]

Exponent = Tuple[int, ...]


class DegreeOverflow(AlgebraError):
    pass


class IncompatibleAlgebras(AlgebraError):
    pass


class NonUnitConstantTerm(AlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class QSeries:
    rank: int
    degree: int
    lam: Matrix
    terms: Dict[Exponent, RatFunc] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise DegreeOverflow(f"degree bound must be >= 0, got {self.degree}")
        if len(self.lam) != self.rank or any(len(row) != self.rank for row in self.lam):
            raise IncompatibleAlgebras(f"lambda must be {self.rank}x{self.rank}")
        for i in range(self.rank):
            for j in range(self.rank):
                if self.lam[i][j] != -self.lam[j][i]:
                    raise IncompatibleAlgebras("lambda must be skew-symmetric")
        for exp, coeff in self.terms.items():
            _check_exponent(exp, self.rank, self.degree)
            if coeff.is_zero():
                raise AlgebraError(f"zero coefficient stored at y{list(exp)}")

    def coefficient(self, exp: Sequence[int]) -> RatFunc:
        return self.terms.get(tuple(exp), RatFunc.from_int(0))

    def with_terms(self, terms: Dict[Exponent, RatFunc]) -> "QSeries":
        return QSeries(
            rank=self.rank,
            degree=self.degree,
            lam=self.lam,
            terms={e: c for e, c in terms.items() if not c.is_zero()},
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __mul__(self, other: "QSeries") -> "QSeries":
        return qs_mul(self, other)

    def __str__(self) -> str:
        return qs_print(self)


def _check_exponent(exp: Sequence[int], rank: int, degree: int) -> None:
    if len(exp) != rank:
        raise IncompatibleAlgebras(f"exponent {list(exp)} does not have length {rank}")
    if any(x < 0 for x in exp):
        raise AlgebraError(f"exponent {list(exp)} has negative entries")
    if sum(exp) > degree:
        raise DegreeOverflow(
            f"exponent {list(exp)} has total degree {sum(exp)} > {degree}"
        )


def _pair(lam: Matrix, alpha: Exponent, beta: Exponent) -> int:
    return sum(
        alpha[i] * beta[j] * lam[i][j]
        for i in range(len(alpha))
        if alpha[i]
        for j in range(len(beta))
        if beta[j]
    )


def _check_compatible(a: QSeries, b: QSeries) -> None:
    if a.rank != b.rank or a.degree != b.degree or a.lam != b.lam:
        raise IncompatibleAlgebras(
            f"series live in different algebras: "
            f"(rank {a.rank}, D {a.degree}) vs (rank {b.rank}, D {b.degree})"
        )


# ---------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------

def qs_monomial(n: int, degree: int, lam: Sequence[Sequence[int]], alpha: Sequence[int]) -> QSeries:
    exp = tuple(int(x) for x in alpha)
    _check_exponent(exp, n, degree)
    return QSeries(rank=n, degree=degree, lam=as_matrix(lam), terms={exp: ONE})


def qs_one(n: int, degree: int, lam: Sequence[Sequence[int]]) -> QSeries:
    return qs_monomial(n, degree, lam, (0,) * n)


def dilog_coefficient(k: int) -> RatFunc:
    """
    c_k = v^(k^2) / prod_{j<k} (q^k - q^j) with q = v^2; c_0 = 1.
    """
    if k == 0:
        return ONE
    den = ONE_POLY
    for j in range(k):
        den = den * (v_power(2 * k) - v_power(2 * j))
    return RatFunc.of(v_power(k * k), den)


def qdilog(n: int, degree: int, lam: Sequence[Sequence[int]], beta: ClassVector) -> QSeries:
    """
    Quantum dilogarithm E(y^beta) = sum_k c_k y^(k beta), truncated at D.
    Powers of y^beta carry no q-factor since lambda(beta, beta) = 0.
    """
    beta = tuple(int(x) for x in beta)
    if len(beta) != n:
        raise IncompatibleAlgebras(f"class {list(beta)} does not have length {n}")
    if not any(beta):
        raise ZeroClass("the quantum dilogarithm needs a nonzero class")
    if any(x < 0 for x in beta):
        raise AlgebraError(f"class {list(beta)} has negative entries")

    size = sum(beta)
    terms: Dict[Exponent, RatFunc] = {}
    k = 0
    while k * size <= degree:
        terms[tuple(k * x for x in beta)] = dilog_coefficient(k)
        k += 1
    return QSeries(rank=n, degree=degree, lam=as_matrix(lam), terms=terms)


# ---------------------------------------------------------------------
# Product and inverse
# ---------------------------------------------------------------------

def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    _check_compatible(a, b)
    bound = a.degree
    buckets: Dict[Exponent, List[RatFunc]] = defaultdict(list)

    b_items = [(beta, sum(beta), coeff) for beta, coeff in b.terms.items()]
    for alpha, ca in a.terms.items():
        da = sum(alpha)
        for beta, db, cb in b_items:
            if da + db > bound:
                continue
            gamma = tuple(x + y for x, y in zip(alpha, beta))
            buckets[gamma].append((ca * cb).times_v(_pair(a.lam, alpha, beta)))

    return a.with_terms({gamma: ratfunc_sum(parts) for gamma, parts in buckets.items()})


def qs_product(factors: Iterable[QSeries], start: QSeries) -> QSeries:
    result = start
    for factor in factors:
        result = qs_mul(result, factor)
    return result


def qs_inv(a: QSeries) -> QSeries:
    """
    Degree-by-degree solution of a * b = 1; in an associative algebra the
    truncated right inverse is two-sided.
    """
    zero = (0,) * a.rank
    constant = a.terms.get(zero)
    if constant is None or constant.is_zero():
        raise NonUnitConstantTerm("constant term is zero; series is not invertible")

    constant_inv = constant.inv()
    nonconstant = [(alpha, sum(alpha), c) for alpha, c in a.terms.items() if alpha != zero]

    result: Dict[Exponent, RatFunc] = {zero: constant_inv}
    by_degree: Dict[int, List[Tuple[Exponent, RatFunc]]] = defaultdict(list)
    by_degree[0].append((zero, constant_inv))

    for d in range(1, a.degree + 1):
        buckets: Dict[Exponent, List[RatFunc]] = defaultdict(list)
        for alpha, da, ca in nonconstant:
            if da > d:
                continue
            for beta, cb in by_degree[d - da]:
                gamma = tuple(x + y for x, y in zip(alpha, beta))
                buckets[gamma].append((ca * cb).times_v(_pair(a.lam, alpha, beta)))
        for gamma, parts in sorted(buckets.items()):
            value = -(constant_inv * ratfunc_sum(parts))
            if not value.is_zero():
                result[gamma] = value
                by_degree[d].append((gamma, value))

    return a.with_terms(result)


# ---------------------------------------------------------------------
# Comparison and printing
# ---------------------------------------------------------------------

def qs_eq(a: QSeries, b: QSeries) -> bool:
    _check_compatible(a, b)
    if set(a.terms) != set(b.terms):
        return False
    return all(a.terms[exp] == b.terms[exp] for exp in a.terms)


def _graded_key(exp: Exponent) -> Tuple[int, Exponent]:
    return sum(exp), exp


def qs_print(a: QSeries) -> str:
    """
    One "y[alpha]: num/den" line per term, graded-lexicographic order.
    """
    lines = []
    for exp in sorted(a.terms, key=_graded_key):
        body = ",".join(str(x) for x in exp)
        lines.append(f"y[{body}]: {a.terms[exp].to_text()}")
    return "\n".join(lines)


def sorted_terms(a: QSeries) -> List[Tuple[Exponent, RatFunc]]:
    return [(exp, a.terms[exp]) for exp in sorted(a.terms, key=_graded_key)]


def series_from_terms(
    rank: int,
    degree: int,
    lam: Sequence[Sequence[int]],
    rows: Iterable[Tuple[Sequence[int], HalfPowerPoly, HalfPowerPoly]],
) -> QSeries:
    terms: Dict[Exponent, RatFunc] = {}
    for exp, num, den in rows:
        key = tuple(int(x) for x in exp)
        if key in terms:
            raise AlgebraError(f"duplicate exponent {list(key)}")
        terms[key] = RatFunc.of(num, den)
    return QSeries(rank=rank, degree=degree, lam=as_matrix(lam), terms={
        e: c for e, c in terms.items() if not c.is_zero()
    })

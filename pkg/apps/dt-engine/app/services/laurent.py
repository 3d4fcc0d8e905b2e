"""
Exact coefficient arithmetic in Q(v), with v playing the role of q^{1/2}.

HalfPowerPoly is a sparse Laurent polynomial in v with integer
coefficients. RatFunc is a quotient of two of them kept in normal form:
the denominator has lowest exponent 0 and positive leading coefficient,
and numerator and denominator share no factor beyond a unit monomial.
Polynomial gcd and exact division are delegated to sympy's dense integer
polynomial rings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

_RING, _V = ring("v", ZZ)

Terms = Tuple[Tuple[int, int], ...]


# ---------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------

class AlgebraError(ArithmeticError):
    pass


class DivisionByZero(AlgebraError):
    pass


class PolyParseError(AlgebraError, ValueError):
    pass


# ---------------------------------------------------------------------
# HalfPowerPoly
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class HalfPowerPoly:
    """
    Sparse Laurent polynomial sum c_e v^e; terms sorted by exponent,
    no zero coefficients. The zero polynomial has no terms.
    """

    terms: Terms = ()

    @classmethod
    def from_dict(cls, coeffs: Dict[int, int]) -> "HalfPowerPoly":
        return cls(tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c)))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "HalfPowerPoly":
        return cls.from_dict({exponent: coefficient})

    @classmethod
    def constant(cls, value: int) -> "HalfPowerPoly":
        return cls.from_dict({0: value})

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_exp(self) -> int:
        return self.terms[0][0]

    @property
    def max_exp(self) -> int:
        return self.terms[-1][0]

    @property
    def leading_coefficient(self) -> int:
        return self.terms[-1][1]

    def __add__(self, other: "HalfPowerPoly") -> "HalfPowerPoly":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return HalfPowerPoly.from_dict(out)

    def __neg__(self) -> "HalfPowerPoly":
        return HalfPowerPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "HalfPowerPoly") -> "HalfPowerPoly":
        return self + (-other)

    def __mul__(self, other: "HalfPowerPoly") -> "HalfPowerPoly":
        out: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return HalfPowerPoly.from_dict(out)

    def shift(self, by: int) -> "HalfPowerPoly":
        return HalfPowerPoly(tuple((e + by, c) for e, c in self.terms))

    # -- sympy bridge -------------------------------------------------

    def _to_ring(self):
        """
        (polynomial with nonzero constant term, shift) with self = v^shift * poly.
        """
        shift = self.min_exp
        poly = _RING.from_dict({(e - shift,): c for e, c in self.terms})
        return poly, shift

    @classmethod
    def _from_ring(cls, poly, shift: int = 0) -> "HalfPowerPoly":
        return cls.from_dict({monom[0] + shift: int(c) for monom, c in poly.items()})

    # -- text ---------------------------------------------------------

    def to_text(self) -> str:
        """
        Descending exponents, e.g. "v^3 - 2*v + 1", "v^-2".
        """
        if not self.terms:
            return "0"
        parts = []
        for index, (e, c) in enumerate(reversed(self.terms)):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = "v" if e == 1 else f"v^{e}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if index == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*(?P<star>\*)?\s*)?"
    r"(?P<var>v(?:\s*\^\s*(?P<exp>-?\d+))?)?\s*"
)


def parse_poly(text: str) -> HalfPowerPoly:
    """
    Inverse of HalfPowerPoly.to_text; also accepts "2v", "+v^0" and
    unsorted terms.
    """
    source = text.strip()
    if not source:
        raise PolyParseError("empty polynomial text")
    if source == "0":
        return HalfPowerPoly()

    coeffs: Dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(source):
        match = _TERM.match(source, pos)
        if match is None or match.end() == pos:
            raise PolyParseError(f"cannot parse polynomial {text!r} at offset {pos}")
        if match.group("coeff") is None and match.group("var") is None:
            raise PolyParseError(f"cannot parse polynomial {text!r} at offset {pos}")
        if match.group("star") and match.group("var") is None:
            raise PolyParseError(f"dangling '*' in polynomial {text!r}")
        if not first and match.group("sign") is None:
            raise PolyParseError(f"missing operator in polynomial {text!r} at offset {pos}")

        coefficient = int(match.group("coeff")) if match.group("coeff") else 1
        if match.group("sign") == "-":
            coefficient = -coefficient
        if match.group("var") is None:
            exponent = 0
        elif match.group("exp") is None:
            exponent = 1
        else:
            exponent = int(match.group("exp"))

        coeffs[exponent] = coeffs.get(exponent, 0) + coefficient
        pos = match.end()
        first = False

    return HalfPowerPoly.from_dict(coeffs)


def v_power(exponent: int) -> HalfPowerPoly:
    return HalfPowerPoly.monomial(exponent)


ONE_POLY = HalfPowerPoly.constant(1)
ZERO_POLY = HalfPowerPoly()


# ---------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------

def _normalize(num: HalfPowerPoly, den: HalfPowerPoly) -> Tuple[HalfPowerPoly, HalfPowerPoly]:
    if den.is_zero():
        raise DivisionByZero("zero denominator")
    if num.is_zero():
        return ZERO_POLY, ONE_POLY

    num_poly, num_shift = num._to_ring()
    den_poly, den_shift = den._to_ring()

    _, num_poly, den_poly = num_poly.cofactors(den_poly)
    if den_poly.LC < 0:
        num_poly, den_poly = -num_poly, -den_poly

    return (
        HalfPowerPoly._from_ring(num_poly, num_shift - den_shift),
        HalfPowerPoly._from_ring(den_poly),
    )


@dataclass(frozen=True, eq=False)
class RatFunc:
    num: HalfPowerPoly
    den: HalfPowerPoly

    @classmethod
    def of(cls, num: HalfPowerPoly, den: HalfPowerPoly = ONE_POLY) -> "RatFunc":
        n, d = _normalize(num, den)
        return cls(n, d)

    @classmethod
    def from_int(cls, value: int) -> "RatFunc":
        return cls.of(HalfPowerPoly.constant(value))

    @classmethod
    def v_power(cls, exponent: int) -> "RatFunc":
        return cls(HalfPowerPoly.monomial(exponent), ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return RatFunc.of(self.num + other.num, self.den)
        return RatFunc.of(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero() or other.is_zero():
            return ZERO
        return RatFunc.of(self.num * other.num, self.den * other.den)

    def times_v(self, exponent: int) -> "RatFunc":
        """Multiply by v^exponent; the normal form only moves the shift."""
        if exponent == 0 or self.is_zero():
            return self
        return RatFunc(self.num.shift(exponent), self.den)

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("zero has no inverse")
        return RatFunc.of(self.den, self.num)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inv()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def to_text(self) -> str:
        return f"{self.num.to_text()}/{self.den.to_text()}"

    def __str__(self) -> str:
        return self.to_text()


ZERO = RatFunc(ZERO_POLY, ONE_POLY)
ONE = RatFunc(ONE_POLY, ONE_POLY)


def ratfunc_sum(values: Iterable[RatFunc]) -> RatFunc:
    """
    Sum with one normalization at the end: numerators are brought over the
    product of the distinct denominators.
    """
    by_den: Dict[HalfPowerPoly, HalfPowerPoly] = {}
    for value in values:
        if value.is_zero():
            continue
        by_den[value.den] = by_den.get(value.den, ZERO_POLY) + value.num
    if not by_den:
        return ZERO
    total = ZERO
    for den, num in by_den.items():
        total = total + RatFunc.of(num, den)
    return total


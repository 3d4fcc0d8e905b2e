"""
Central charge domain models.

All values are exact: components are fractions.Fraction, so phase
comparisons reduce to integer cross products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

RationalLike = Union[int, str, Fraction]


class ChargeError(ValueError):
    pass


class ZeroClass(ChargeError):
    pass


class OutOfHalfPlane(ChargeError):
    pass


def to_rational(value: RationalLike) -> Fraction:
    """
    Accept ints, Fractions and "p/q" strings. Floats are refused: they would
    smuggle rounding into the phase logic.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ChargeError(f"expected an integer or 'p/q' string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ChargeError(f"not a rational number: {value!r}") from exc


@dataclass(frozen=True)
class RationalComplex:
    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re: RationalLike, im: RationalLike) -> "RationalComplex":
        return cls(to_rational(re), to_rational(im))

    def __add__(self, other: "RationalComplex") -> "RationalComplex":
        return RationalComplex(self.re + other.re, self.im + other.im)

    def scale(self, factor: Union[int, Fraction]) -> "RationalComplex":
        return RationalComplex(self.re * factor, self.im * factor)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def in_half_plane(self) -> bool:
        return self.im > 0 or (self.im == 0 and self.re < 0)

    def __str__(self) -> str:
        return f"({self.re}, {self.im})"


ZERO = RationalComplex(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class CentralCharge:
    """
    Values z_i = Z(S_i) of the simple classes; each lies in the half-plane
    {im > 0} plus the negative real axis.
    """

    z: Tuple[RationalComplex, ...]

    def __post_init__(self) -> None:
        if not self.z:
            raise ChargeError("a central charge needs at least one component")
        for index, value in enumerate(self.z, start=1):
            if not value.in_half_plane():
                raise OutOfHalfPlane(
                    f"z_{index} = {value} is outside the upper half-plane"
                )

    @property
    def n(self) -> int:
        return len(self.z)

    @classmethod
    def of(cls, *pairs: Tuple[RationalLike, RationalLike]) -> "CentralCharge":
        return cls(tuple(RationalComplex.of(re, im) for re, im in pairs))

    def permuted(self, perm: Tuple[int, ...]) -> "CentralCharge":
        """
        Charge for the relabeled quiver: new z_{perm(i)} = old z_i.
        """
        out = [ZERO] * self.n
        for i, image in enumerate(perm):
            out[image - 1] = self.z[i]
        return CentralCharge(tuple(out))

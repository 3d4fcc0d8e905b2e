from __future__ import annotations

import pytest

from app.services.laurent import (
    DivisionByZero,
    HalfPowerPoly,
    ONE,
    ONE_POLY,
    PolyParseError,
    RatFunc,
    ZERO,
    ZERO_POLY,
    parse_poly,
    ratfunc_sum,
    v_power,
)


def test_poly_arithmetic():
    p = v_power(1) + HalfPowerPoly.constant(1)
    q = v_power(1) - HalfPowerPoly.constant(1)

    assert p * q == v_power(2) - ONE_POLY
    assert (p - p).is_zero()
    assert p.shift(-3) == HalfPowerPoly.from_dict({-2: 1, -3: 1})


def test_poly_text():
    p = HalfPowerPoly.from_dict({3: 1, 1: -2, 0: 1})

    assert p.to_text() == "v^3 - 2*v + 1"
    assert HalfPowerPoly.from_dict({-2: 1}).to_text() == "v^-2"
    assert (-ONE_POLY).to_text() == "-1"
    assert ZERO_POLY.to_text() == "0"


def test_parse_poly_accepts_loose_forms():
    assert parse_poly("v^3 - 2*v + 1") == HalfPowerPoly.from_dict({3: 1, 1: -2, 0: 1})
    assert parse_poly("2v + v^-1") == HalfPowerPoly.from_dict({1: 2, -1: 1})
    assert parse_poly("1 + v^0") == HalfPowerPoly.constant(2)
    assert parse_poly("0").is_zero()


@pytest.mark.parametrize("text", ["", "v^", "2 3", "v *", "x"])
def test_parse_poly_rejects_garbage(text):
    with pytest.raises(PolyParseError):
        parse_poly(text)


def test_ratfunc_normal_form_cancels_common_factor():
    value = RatFunc.of(v_power(2) - ONE_POLY, v_power(1) - ONE_POLY)

    assert value.num == v_power(1) + ONE_POLY
    assert value.den == ONE_POLY


def test_ratfunc_normal_form_moves_monomials_to_numerator():
    value = RatFunc.of(v_power(2), v_power(3))

    assert value.num == v_power(-1)
    assert value.den == ONE_POLY


def test_ratfunc_normal_form_positive_leading_coefficient():
    value = RatFunc.of(ONE_POLY, ONE_POLY - v_power(2))

    assert value.den == v_power(2) - ONE_POLY
    assert value.num == -ONE_POLY
    assert value.to_text() == "-1/v^2 - 1"


def test_ratfunc_field_operations():
    x = RatFunc.of(v_power(1), v_power(2) - ONE_POLY)
    y = RatFunc.of(v_power(3), ONE_POLY + v_power(2))

    assert x * x.inv() == ONE
    assert (x + y) - y == x
    assert x / y * y == x
    assert x - x == ZERO
    assert x.times_v(2) == x * RatFunc.v_power(2)


def test_ratfunc_equality_is_by_value():
    a = RatFunc.of(v_power(1), v_power(2) - ONE_POLY)
    b = RatFunc.of(v_power(2), v_power(3) - v_power(1))

    assert a == b
    assert hash(a) == hash(b)
    assert a != RatFunc.from_int(1)


def test_ratfunc_division_by_zero():
    with pytest.raises(DivisionByZero):
        RatFunc.of(ONE_POLY, ZERO_POLY)
    with pytest.raises(DivisionByZero):
        ZERO.inv()


def test_ratfunc_sum_matches_pairwise_addition():
    values = [
        RatFunc.of(v_power(k), v_power(2 * k) - ONE_POLY)
        for k in range(1, 5)
    ] + [RatFunc.from_int(-3), ZERO]

    expected = ZERO
    for value in values:
        expected = expected + value

    assert ratfunc_sum(values) == expected
    assert ratfunc_sum([]) == ZERO

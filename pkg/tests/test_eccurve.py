import random

import pytest

from msdmv.eccurve import (
    INFINITY,
    Curve,
    Point,
    curve_order,
    decode_point,
    find_point_of_order,
    is_on_curve,
    point_add,
    point_neg,
    point_order,
    point_sub,
    random_point,
    scalar_mul,
    sqrt_mod,
)
from msdmv.errors import ParameterError, SizeCapError

EX1 = Curve(419, 0, 2)
EX2 = Curve(6793, 0, 5)
P1 = Point(22, 151)
Q1 = Point(55, 156)


def test_singular_curve_rejected():
    with pytest.raises(ParameterError):
        Curve(419, 0, 0)  # y^2 = x^3 has zero discriminant


def test_point_encoding_round_trip():
    assert P1.encode() == "22,151"
    assert INFINITY.encode() == "O"
    assert decode_point("22,151") == P1
    assert decode_point("O").is_infinity
    with pytest.raises(ParameterError):
        decode_point("garbage")


def test_identity_and_inverse():
    assert point_add(P1, INFINITY, EX1) == P1
    assert point_add(INFINITY, P1, EX1) == P1
    assert point_add(P1, point_neg(P1, EX1), EX1).is_infinity


def test_off_curve_rejected():
    with pytest.raises(ParameterError):
        point_add(Point(1, 1), P1, EX1)
    with pytest.raises(ParameterError):
        scalar_mul(3, Point(1, 1), EX1)


def test_order_15_point_by_repeated_addition():
    acc = INFINITY
    for _ in range(15):
        acc = point_add(acc, P1, EX1)
    assert acc.is_infinity


def test_scalar_mul_examples():
    assert scalar_mul(0, P1, EX1).is_infinity
    assert scalar_mul(15, P1, EX1).is_infinity
    assert scalar_mul(91, Point(3245, 4097), EX2).is_infinity
    with pytest.raises(ParameterError):
        scalar_mul(-1, P1, EX1)


def test_curve_orders():
    assert curve_order(EX1) == 420
    assert curve_order(EX2) == 6916


def test_curve_order_cap():
    with pytest.raises(SizeCapError):
        curve_order(Curve(100_000_007, 0, 7))


@pytest.mark.parametrize("curve", [Curve(97, 3, 7), Curve(211, 1, 5), EX1])
def test_curve_order_matches_exhaustive_enumeration(curve):
    count = 1
    for x in range(curve.p):
        for y in range(curve.p):
            if (y * y - (x**3 + curve.a * x + curve.b)) % curve.p == 0:
                count += 1
    assert curve_order(curve) == count


def test_point_orders():
    assert point_order(P1, EX1, 420) == 15
    assert point_order(Q1, EX1, 420) == 14
    assert point_order(INFINITY, EX1, 420) == 1
    assert point_order(Point(3245, 4097), EX2, 6916) == 91
    assert point_order(Point(5223, 4702), EX2, 6916) == 38


def test_find_point_of_order():
    rng = random.Random(7)
    for n in (15, 14, 21, 5):
        pt = find_point_of_order(n, EX1, 420, rng)
        assert point_order(pt, EX1, 420) == n
    assert find_point_of_order(1, EX1, 420, rng).is_infinity
    with pytest.raises(ParameterError):
        find_point_of_order(13, EX1, 420, rng)  # 13 does not divide 420


def test_sqrt_mod():
    for p in (419, 6793, 97, 13):  # both p % 4 == 3 and p % 4 == 1 cases
        for v in range(0, p, 5):
            sq = v * v % p
            root = sqrt_mod(sq, p)
            assert root * root % p == sq
    with pytest.raises(ParameterError):
        sqrt_mod(2, 419)  # 2**209 == -1 mod 419, so 2 is not a square


def test_group_axioms_on_random_samples():
    rng = random.Random(1)
    for curve in (EX1, EX2):
        pts = [random_point(curve, rng) for _ in range(8)]
        for _ in range(200):
            a, b, c = (rng.choice(pts) for _ in range(3))
            assert point_add(a, b, curve) == point_add(b, a, curve)
            assert point_add(point_add(a, b, curve), c, curve) == point_add(
                a, point_add(b, c, curve), curve
            )
        for a in pts:
            assert is_on_curve(a, curve)
            assert point_add(a, point_neg(a, curve), curve).is_infinity


def test_scalar_distributes_over_addition():
    rng = random.Random(2)
    for _ in range(50):
        m, n = rng.randrange(200), rng.randrange(200)
        assert scalar_mul(m + n, P1, EX1) == point_add(
            scalar_mul(m, P1, EX1), scalar_mul(n, P1, EX1), EX1
        )


def test_point_sub():
    a = scalar_mul(9, P1, EX1)
    b = scalar_mul(4, P1, EX1)
    assert point_sub(a, b, EX1) == scalar_mul(5, P1, EX1)

"""Short-Weierstrass elliptic curves over small prime fields.

Affine arithmetic with a modular inversion per addition: performance is
irrelevant at desk scale and affine code can be audited line by line
against worked examples.  Group and point orders are found by brute
force, with a hard cap on the field size.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParameterError, SearchFailureError, SizeCapError
from .numtheory import divisors, is_prime, mod_inv

# Field-size cap for O(p) order enumeration.
ORDER_ENUMERATION_CAP = 10**7
# Retry budget for the random point-of-given-order search.
FIND_POINT_RETRIES = 1000


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + a*x + b over Z_p, p an odd prime."""

    p: int
    a: int
    b: int

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ParameterError(f"field modulus {self.p} is not an odd prime")
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise ParameterError("singular curve: discriminant is zero")


@dataclass(frozen=True)
class Point:
    """An affine point, or the identity when both coordinates are None."""

    x: int | None = None
    y: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def encode(self) -> str:
        """Canonical "x,y" string; the identity encodes as "O"."""
        if self.is_infinity:
            return "O"
        return f"{self.x},{self.y}"


INFINITY = Point()


def decode_point(text: str) -> Point:
    """Inverse of Point.encode."""
    if text == "O":
        return INFINITY
    try:
        x, y = text.split(",")
        return Point(int(x), int(y))
    except ValueError:
        raise ParameterError(f"bad point encoding {text!r}") from None


def is_on_curve(pt: Point, curve: Curve) -> bool:
    if pt.is_infinity:
        return True
    if not (0 <= pt.x < curve.p and 0 <= pt.y < curve.p):
        return False
    return (pt.y * pt.y - (pt.x**3 + curve.a * pt.x + curve.b)) % curve.p == 0


def _require_on_curve(pt: Point, curve: Curve) -> None:
    if not is_on_curve(pt, curve):
        raise ParameterError(f"point {pt.encode()} is not on the curve")


def point_neg(pt: Point, curve: Curve) -> Point:
    _require_on_curve(pt, curve)
    if pt.is_infinity:
        return INFINITY
    return Point(pt.x, (-pt.y) % curve.p)


def point_add(p1: Point, p2: Point, curve: Curve) -> Point:
    """Chord-tangent group law with the point at infinity as identity."""
    _require_on_curve(p1, curve)
    _require_on_curve(p2, curve)
    return _add_unchecked(p1, p2, curve)


def _add_unchecked(p1: Point, p2: Point, curve: Curve) -> Point:
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    p = curve.p
    if p1.x == p2.x and (p1.y + p2.y) % p == 0:
        return INFINITY
    if p1 == p2:
        slope = (3 * p1.x * p1.x + curve.a) * mod_inv(2 * p1.y, p) % p
    else:
        slope = (p2.y - p1.y) * mod_inv(p2.x - p1.x, p) % p
    x3 = (slope * slope - p1.x - p2.x) % p
    return Point(x3, (slope * (p1.x - x3) - p1.y) % p)


def point_sub(p1: Point, p2: Point, curve: Curve) -> Point:
    return point_add(p1, point_neg(p2, curve), curve)


def scalar_mul(k: int, pt: Point, curve: Curve) -> Point:
    """[k]P by double-and-add; k = 0 gives the identity.

    Negative multiples are expressed as scalar_mul(-k, point_neg(P)).
    """
    if k < 0:
        raise ParameterError(f"scalar must be >= 0, got {k}")
    _require_on_curve(pt, curve)
    acc = INFINITY
    addend = pt
    while k:
        if k & 1:
            acc = _add_unchecked(acc, addend, curve)
        addend = _add_unchecked(addend, addend, curve)
        k >>= 1
    return acc


def _legendre(value: int, p: int) -> int:
    """1 for a nonzero square, -1 for a non-square, 0 for zero."""
    value %= p
    if value == 0:
        return 0
    return 1 if pow(value, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(value: int, p: int) -> int:
    """A square root of value modulo an odd prime (value must be a square)."""
    value %= p
    if value == 0:
        return 0
    if _legendre(value, p) != 1:
        raise ParameterError(f"{value} is not a square mod {p}")
    if p % 4 == 3:
        return pow(value, (p + 1) // 4, p)
    # Tonelli-Shanks for p == 1 mod 4.
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while _legendre(z, p) != -1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(value, q, p), pow(value, (q + 1) // 2, p)
    while t != 1:
        i, probe = 0, t
        while probe != 1:
            probe = probe * probe % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def curve_order(curve: Curve) -> int:
    """|E| by counting, per x, the solutions of y^2 = x^3 + ax + b, plus infinity."""
    if curve.p > ORDER_ENUMERATION_CAP:
        raise SizeCapError(
            f"field modulus {curve.p} exceeds the enumeration cap {ORDER_ENUMERATION_CAP}"
        )
    count = 1
    for x in range(curve.p):
        count += 1 + _legendre(x**3 + curve.a * x + curve.b, curve.p)
    return count


def point_order(pt: Point, curve: Curve, group_order: int) -> int:
    """Least divisor d of the group order with [d]P = identity."""
    _require_on_curve(pt, curve)
    if pt.is_infinity:
        return 1
    for d in divisors(group_order):
        if scalar_mul(d, pt, curve).is_infinity:
            return d
    raise ParameterError(f"group order {group_order} does not annihilate {pt.encode()}")


def random_point(curve: Curve, rng: random.Random) -> Point:
    """A uniform-ish affine point, by sampling x until the cubic is a square."""
    for _ in range(FIND_POINT_RETRIES):
        x = rng.randrange(curve.p)
        rhs = (x**3 + curve.a * x + curve.b) % curve.p
        if _legendre(rhs, curve.p) >= 0:
            y = sqrt_mod(rhs, curve.p)
            return Point(x, y if rng.randrange(2) == 0 or y == 0 else curve.p - y)
    raise SearchFailureError("could not sample a curve point")


def find_point_of_order(
    n: int, curve: Curve, group_order: int, rng: random.Random
) -> Point:
    """A point of exact order n, by scaling random points by the cofactor."""
    if n < 1 or group_order % n != 0:
        raise ParameterError(f"{n} does not divide the group order {group_order}")
    if n == 1:
        return INFINITY
    cofactor = group_order // n
    for _ in range(FIND_POINT_RETRIES):
        candidate = scalar_mul(cofactor, random_point(curve, rng), curve)
        if candidate.is_infinity:
            continue
        if point_order(candidate, curve, group_order) == n:
            return candidate
    raise SearchFailureError(
        f"no point of order {n} found after {FIND_POINT_RETRIES} tries"
    )

"""Elliptic curve group arithmetic over small prime fields.

Affine chord-and-tangent addition with the modular inverse computed by
extended Euclid. The shipped teaching curve is y^2 = x^3 + 2x + 2 over
F_17, generator (5, 1), group order 19.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .numbers import is_prime, modinv


@dataclass(frozen=True)
class EcPoint:
    """Affine point, or the point at infinity when both coordinates are None."""

    x: Optional[int] = None
    y: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValueError("both coordinates or neither must be set")

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = EcPoint()


@dataclass(frozen=True)
class EcCurve:
    p: int
    a: int
    b: int
    generator: EcPoint
    group_order: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError("field modulus must be prime")
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0 mod p")
        if self.group_order < 1:
            raise ValueError("group order must be positive")
        if not self.contains(self.generator) or self.generator.is_infinity:
            raise ValueError("generator must be an affine point on the curve")

    def contains(self, point: EcPoint) -> bool:
        if point.is_infinity:
            return True
        x, y = point.x, point.y
        if not (0 <= x < self.p and 0 <= y < self.p):
            return False
        return (y * y - (x**3 + self.a * x + self.b)) % self.p == 0

    def _require(self, point: EcPoint) -> None:
        if not self.contains(point):
            raise ValueError(f"point {point} is not on the curve")

    def negate(self, point: EcPoint) -> EcPoint:
        self._require(point)
        if point.is_infinity:
            return INFINITY
        return EcPoint(point.x, (-point.y) % self.p)


def ec_add(curve: EcCurve, p1: EcPoint, p2: EcPoint) -> EcPoint:
    curve._require(p1)
    curve._require(p2)
    if p1.is_infinity:
        return p2
    if p2.is_infinity:
        return p1
    x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
    mod = curve.p
    if x1 == x2 and (y1 + y2) % mod == 0:
        return INFINITY
    if p1 == p2:
        slope = (3 * x1 * x1 + curve.a) * modinv(2 * y1, mod) % mod
    else:
        slope = (y2 - y1) * modinv(x2 - x1, mod) % mod
    x3 = (slope * slope - x1 - x2) % mod
    y3 = (slope * (x1 - x3) - y1) % mod
    return EcPoint(x3, y3)


def ec_mul(curve: EcCurve, k: int, point: EcPoint) -> EcPoint:
    """Double-and-add scalar multiplication; negative scalars use negation."""
    curve._require(point)
    if k < 0:
        return ec_mul(curve, -k, curve.negate(point))
    result = INFINITY
    addend = point
    while k:
        if k & 1:
            result = ec_add(curve, result, addend)
        addend = ec_add(curve, addend, addend)
        k >>= 1
    return result


def teaching_curve() -> EcCurve:
    """The shipped classroom curve: y^2 = x^3 + 2x + 2 over F_17, |G| = 19."""
    return EcCurve(p=17, a=2, b=2, generator=EcPoint(5, 1), group_order=19)

from __future__ import annotations

from dataclasses import dataclass

from rankstab.eisenstein import ZERO, EisInt, FieldElem

from .models import CurvePoint


@dataclass(frozen=True)
class JacobianPoint:
    """(X : Y : Z) with x = X/Z^2, y = Y/Z^3 over Z[w]; Z = 0 is infinity."""

    X: EisInt
    Y: EisInt
    Z: EisInt

    @property
    def is_infinity(self) -> bool:
        return self.Z.is_zero()

    @classmethod
    def from_affine(cls, point: CurvePoint) -> "JacobianPoint":
        if point.is_infinity:
            return cls(EisInt(1, 0), EisInt(1, 0), ZERO)
        x, y = point.x, point.y
        z = x.den * y.den
        return cls(x.num * x.den * y.den**2, y.num * x.den**3 * y.den**2, z)

    def to_affine(self) -> CurvePoint:
        if self.is_infinity:
            return CurvePoint.infinity()
        z2 = self.Z * self.Z
        return CurvePoint(FieldElem.of(self.X, z2), FieldElem.of(self.Y, z2 * self.Z))


_INFINITY = JacobianPoint(EisInt(1, 0), EisInt(1, 0), ZERO)


def double(p: JacobianPoint) -> JacobianPoint:
    if p.is_infinity or p.Y.is_zero():
        return _INFINITY
    a = p.X * p.X
    b = p.Y * p.Y
    c = b * b
    d = 2 * ((p.X + b) * (p.X + b) - a - c)
    e = 3 * a
    x3 = e * e - 2 * d
    y3 = e * (d - x3) - 8 * c
    z3 = 2 * p.Y * p.Z
    return JacobianPoint(x3, y3, z3)


def add(p: JacobianPoint, q: JacobianPoint) -> JacobianPoint:
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    z1z1 = p.Z * p.Z
    z2z2 = q.Z * q.Z
    u1 = p.X * z2z2
    u2 = q.X * z1z1
    s1 = p.Y * q.Z * z2z2
    s2 = q.Y * p.Z * z1z1
    h = u2 - u1
    r = 2 * (s2 - s1)
    if h.is_zero():
        if r.is_zero():
            return double(p)
        return _INFINITY
    i = (2 * h) * (2 * h)
    j = h * i
    v = u1 * i
    x3 = r * r - j - 2 * v
    y3 = r * (v - x3) - 2 * s1 * j
    z3 = ((p.Z + q.Z) * (p.Z + q.Z) - z1z1 - z2z2) * h
    return JacobianPoint(x3, y3, z3)


def multiply(k: int, p: JacobianPoint) -> JacobianPoint:
    result = _INFINITY
    for bit in bin(k)[2:] if k > 0 else "":
        result = double(result)
        if bit == "1":
            result = add(result, p)
    return result

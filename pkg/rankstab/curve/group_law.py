from __future__ import annotations

from typing import Any

from .models import CurvePoint


def satisfies(n: Any, point: CurvePoint) -> bool:
    if point.is_infinity:
        return True
    return (point.y * point.y - point.x * point.x * point.x - n).is_zero()


def add_points(p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent sum on y^2 = x^3 + n; n never enters the formulas."""
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    x1, y1, x2, y2 = p.x, p.y, q.x, q.y
    if x1 == x2:
        if (y1 + y2).is_zero():
            return CurvePoint.infinity()
        slope = (3 * x1 * x1) / (2 * y1)
    else:
        slope = (y2 - y1) / (x2 - x1)
    x3 = slope * slope - x1 - x2
    y3 = slope * (x1 - x3) - y1
    return CurvePoint(x3, y3)


def multiply_point(k: int, p: CurvePoint) -> CurvePoint:
    if k < 0:
        return multiply_point(-k, -p)
    result = CurvePoint.infinity()
    addend = p
    while k:
        if k & 1:
            result = add_points(result, addend)
        addend = add_points(addend, addend)
        k >>= 1
    return result

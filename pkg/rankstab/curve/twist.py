from __future__ import annotations

from typing import Any

from rankstab.eisenstein import FieldElem
from rankstab.quad_ext import QuadElem, QuadExt

from .errors import CurveDomainError
from .group_law import satisfies
from .models import CurveModel, CurvePoint, KPoint


def transport_coordinates(x: Any, y: Any, q: Any) -> KPoint:
    """(X, Y) on y^2 = x^3 + q^3 n  ->  (X/q, Y/(q sqrt q)) on y^2 = x^3 + n."""
    zero = q - q
    return KPoint(QuadElem(x / q, zero, q), QuadElem(zero, y / (q * q), q))


def twisted_n(curve: CurveModel, ext: QuadExt) -> FieldElem:
    return FieldElem.of(ext.q) ** 3 * curve.n_field


def twist_transport(curve: CurveModel, ext: QuadExt, point: CurvePoint) -> KPoint:
    if point.is_infinity:
        return KPoint()
    if not satisfies(twisted_n(curve, ext), point):
        raise CurveDomainError(
            "Point is not on the twisted curve y^2 = x^3 + q^3 n.",
            context=f"{point} with q={ext.q}, n={curve.n}",
        )
    image = transport_coordinates(point.x, point.y, FieldElem.of(ext.q))
    if not image.satisfies(curve.n_field):
        raise CurveDomainError("Transported point fails the curve equation over K.", context=str(point))
    if image.conjugate() != -image:
        raise CurveDomainError("Galois conjugate of the transported point is not its negative.", context=str(point))
    return image


def untransport(curve: CurveModel, ext: QuadExt, point: KPoint) -> CurvePoint:
    if point.is_infinity:
        return CurvePoint.infinity()
    if not point.satisfies(curve.n_field):
        raise CurveDomainError("Point is not on the curve over K.", context=str(point.x))
    if not point.x.c1.is_zero() or not point.y.c0.is_zero():
        raise CurveDomainError("Point is not in the image of the twisted curve.", context=str(point.x))
    q = FieldElem.of(ext.q)
    return CurvePoint(point.x.c0 * q, point.y.c1 * q * q)

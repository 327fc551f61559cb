from __future__ import annotations

from typing import Any, Iterable, Optional

from rankstab.curve import (
    CurveConfig,
    CurvePoint,
    curve_from_n,
    is_nontorsion,
    on_curve,
    satisfies,
    scale_point,
    torsion_bound,
)
from rankstab.eisenstein import EisInt, FieldElem, PrimeElem
from rankstab.triple_sieve import TwistParams, twist_params_hints

from .errors import ConstructionDomainError
from .models import CoverDatum, WitnessCertificate


def cover_map(a: Any, b: Any, r: Any, x: Any, y: Any) -> CurvePoint:
    """(x, y) on a x^3 + 2rb y^3 = 1 maps to (a x y^-2, a (y^-3 - rb)) on y^2 = x^3 + (rab)^2.

    Works over any field whose elements support arithmetic and is_zero (FieldElem, ResidueElem).
    """
    if y.is_zero():
        raise ConstructionDomainError("y must be nonzero.")
    if not (a * x**3 + 2 * r * b * y**3 - 1).is_zero():
        raise ConstructionDomainError("Point is not on the cover.", context=f"x={x} y={y}")
    image = CurvePoint(a * x * y**-2, a * (y**-3 - r * b))
    if not satisfies(r * r * a * a * b * b, image):
        raise ConstructionDomainError("Cover image is off the curve.", context=str(image))
    return image


def build_positive_rank_witness(
    params: TwistParams,
    config: Optional[CurveConfig] = None,
    hints: Iterable[PrimeElem] = (),
) -> CoverDatum:
    a, b, r = params.a, params.b, EisInt.coerce(params.r)
    if a + 2 * r * b != FieldElem.of(1):
        raise ConstructionDomainError("a + 2rb != 1.", context=f"a={a} b={b} r={r}")
    n_raw = FieldElem.of(r * r) * a * a * b * b
    if n_raw.is_zero():
        raise ConstructionDomainError("r^2 a^2 b^2 vanishes; the curve is singular.")

    one = FieldElem.of(1)
    raw_point = cover_map(a, b, r, one, one)
    curve = curve_from_n(n_raw, tuple(hints) + twist_params_hints(params))
    point = scale_point(raw_point, curve.scaling)
    if not on_curve(curve, point):
        raise ConstructionDomainError("Scaled point is off the integral model.", context=str(point))

    bound = torsion_bound(curve, config)
    status = "verified" if is_nontorsion(curve, point, bound) else "torsion-witness"
    return CoverDatum(
        a=a,
        b=b,
        r=r,
        n_raw=n_raw,
        raw_point=raw_point,
        curve=curve,
        point=point,
        certificate=WitnessCertificate(status=status, torsion=bound),
    )

from .arithmetic import (
    ReducedCurve,
    count_points,
    curve_from_n,
    has_good_reduction,
    is_nontorsion,
    on_curve,
    phi_dual_endo,
    phi_endo,
    point_add,
    point_neg,
    point_order,
    reduced_points,
    scalar_mul,
    scale_point,
    small_torsion_points,
    torsion_bound,
    zeta_action,
)
from .errors import CurveConfigError, CurveDomainError, CurveError, InsufficientGoodPrimesError
from .group_law import add_points, multiply_point, satisfies
from .models import CurveConfig, CurveModel, CurvePoint, KPoint, TorsionBound
from .twist import transport_coordinates, twist_transport, twisted_n, untransport

__all__ = [
    "CurveModel",
    "CurvePoint",
    "KPoint",
    "TorsionBound",
    "CurveConfig",
    "CurveError",
    "CurveDomainError",
    "InsufficientGoodPrimesError",
    "CurveConfigError",
    "ReducedCurve",
    "curve_from_n",
    "scale_point",
    "on_curve",
    "point_add",
    "point_neg",
    "scalar_mul",
    "zeta_action",
    "phi_endo",
    "phi_dual_endo",
    "has_good_reduction",
    "count_points",
    "reduced_points",
    "torsion_bound",
    "is_nontorsion",
    "point_order",
    "small_torsion_points",
    "add_points",
    "multiply_point",
    "satisfies",
    "twist_transport",
    "untransport",
    "transport_coordinates",
    "twisted_n",
]

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Optional

from rankstab.eisenstein import (
    OMEGA,
    EisInt,
    FieldElem,
    PrimeElem,
    ResidueElem,
    ResidueField,
    divides,
    eis_sqrt,
    factor,
    lattice_points,
    primes_up_to,
    residue_field,
)

from .errors import CurveDomainError, InsufficientGoodPrimesError
from .group_law import add_points, multiply_point, satisfies
from .jacobian import JacobianPoint, multiply
from .models import CurveConfig, CurveModel, CurvePoint, TorsionBound


def curve_from_n(n0: FieldElem | EisInt | int, hints: Iterable[PrimeElem] = ()) -> CurveModel:
    n0 = FieldElem.coerce(n0)
    if n0.is_zero():
        raise CurveDomainError("n must be nonzero.")
    hints = tuple(hints)
    exponents: dict[EisInt, tuple[PrimeElem, int]] = {}
    for part, sign in ((n0.num, 1), (n0.den, -1)):
        if part.is_unit():
            continue
        for prime, exponent in factor(part, hints=hints).factors:
            _, previous = exponents.get(prime.value, (prime, 0))
            exponents[prime.value] = (prime, previous + sign * exponent)

    scaling = FieldElem.of(1)
    for prime, exponent in exponents.values():
        # exponent + 6k lands in [0, 6)
        shift = -(exponent // 6)
        if shift:
            scaling = scaling * FieldElem.of(prime.value) ** shift
    n = n0 * scaling**6
    if not n.is_integral():
        raise CurveDomainError("Scaled model is not integral.", context=str(n))
    return CurveModel(n=n.num, scaling=scaling)


def scale_point(point: CurvePoint, scaling: FieldElem) -> CurvePoint:
    if point.is_infinity:
        return point
    return CurvePoint(point.x * scaling**2, point.y * scaling**3)


def on_curve(curve: CurveModel, point: CurvePoint) -> bool:
    return satisfies(curve.n_field, point)


def _require_on_curve(curve: CurveModel, *points: CurvePoint) -> None:
    for point in points:
        if not on_curve(curve, point):
            raise CurveDomainError("Point is not on the curve.", context=f"{point} on y^2 = x^3 + {curve.n}")


def point_add(curve: CurveModel, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    _require_on_curve(curve, p, q)
    return add_points(p, q)


def point_neg(curve: CurveModel, p: CurvePoint) -> CurvePoint:
    _require_on_curve(curve, p)
    return -p


def scalar_mul(curve: CurveModel, k: int, p: CurvePoint) -> CurvePoint:
    _require_on_curve(curve, p)
    if k < 0:
        k, p = -k, -p
    return multiply(k, JacobianPoint.from_affine(p)).to_affine()


def zeta_action(curve: CurveModel, p: CurvePoint) -> CurvePoint:
    _require_on_curve(curve, p)
    return _zeta(p)


def _zeta(p: CurvePoint) -> CurvePoint:
    if p.is_infinity:
        return p
    return CurvePoint(p.x * OMEGA, p.y)


def phi_endo(curve: CurveModel, p: CurvePoint) -> CurvePoint:
    _require_on_curve(curve, p)
    return add_points(p, -_zeta(p))


def phi_dual_endo(curve: CurveModel, p: CurvePoint) -> CurvePoint:
    _require_on_curve(curve, p)
    return add_points(p, -_zeta(_zeta(p)))


def has_good_reduction(curve: CurveModel, prime: PrimeElem) -> bool:
    return prime.characteristic not in (2, 3) and not divides(prime.value, curve.n)


@dataclass(frozen=True)
class ReducedCurve:
    """y^2 = x^3 + n over the residue field of a prime; any characteristic."""

    n: EisInt
    prime: PrimeElem

    @cached_property
    def field(self) -> ResidueField:
        return residue_field(self.prime)

    @cached_property
    def n_bar(self) -> ResidueElem:
        return self.field.element(self.n)

    def point(self, x: EisInt | int, y: EisInt | int) -> CurvePoint:
        return CurvePoint(self.field.element(x), self.field.element(y))

    def reduce(self, point: CurvePoint) -> CurvePoint:
        """Reduction of an exact point; a pole at the prime reduces to infinity."""
        if point.is_infinity:
            return point
        if divides(self.prime.value, point.x.den):
            return CurvePoint.infinity()
        return CurvePoint(
            ResidueElem(self.field, self.field.from_field(point.x)),
            ResidueElem(self.field, self.field.from_field(point.y)),
        )

    def contains(self, point: CurvePoint) -> bool:
        return satisfies(self.n_bar, point)

    def points(self) -> list[CurvePoint]:
        found = [CurvePoint.infinity()]
        for x in self.field.elements():
            rhs = self.field.add(self.field.pow(x, 3), self.n_bar.value)
            for y in self.field.square_roots(rhs):
                found.append(CurvePoint(ResidueElem(self.field, x), ResidueElem(self.field, y)))
        return found

    def count(self) -> int:
        field = self.field
        if field.characteristic == 2:
            return len(self.points())
        total = 1
        for x in field.elements():
            rhs = field.add(field.pow(x, 3), self.n_bar.value)
            total += 1 + field.quadratic_character(rhs)
        return total

    def add(self, p: CurvePoint, q: CurvePoint) -> CurvePoint:
        return add_points(p, q)

    def multiply(self, k: int, p: CurvePoint) -> CurvePoint:
        return multiply_point(k, p)

    def zeta(self, p: CurvePoint) -> CurvePoint:
        if p.is_infinity:
            return p
        return CurvePoint(p.x * self.field.element(OMEGA), p.y)

    def phi(self, p: CurvePoint) -> CurvePoint:
        return add_points(p, -self.zeta(p))

    def phi_dual(self, p: CurvePoint) -> CurvePoint:
        return add_points(p, -self.zeta(self.zeta(p)))


def reduced_points(n: EisInt | int, prime: PrimeElem) -> list[CurvePoint]:
    return ReducedCurve(EisInt.coerce(n), prime).points()


def count_points(curve: CurveModel, prime: PrimeElem) -> int:
    if not has_good_reduction(curve, prime):
        raise CurveDomainError("Bad reduction: the prime divides 6n.", context=f"{prime} for n={curve.n}")
    return ReducedCurve(curve.n, prime).count()


def torsion_bound(curve: CurveModel, config: Optional[CurveConfig] = None) -> TorsionBound:
    cfg = config or CurveConfig()
    witnesses: list[tuple[PrimeElem, int]] = []
    tried: list[str] = []
    for prime in primes_up_to(cfg.torsion_prime_max_norm):
        if not has_good_reduction(curve, prime):
            tried.append(f"{prime}(bad)")
            continue
        witnesses.append((prime, count_points(curve, prime)))
        characteristics = {witness.characteristic for witness, _ in witnesses}
        if len(witnesses) >= cfg.torsion_witness_count and len(characteristics) >= 2:
            bound = 0
            for _, order in witnesses:
                bound = gcd(bound, order)
            return TorsionBound(bound=bound, witnesses=tuple(witnesses))
    tried.extend(str(prime) for prime, _ in witnesses)
    raise InsufficientGoodPrimesError(
        "Not enough good primes of two residue characteristics below the search bound.",
        context=", ".join(tried),
    )


def is_nontorsion(curve: CurveModel, point: CurvePoint, bound: TorsionBound) -> bool:
    if point.is_infinity:
        return False
    return not scalar_mul(curve, bound.bound, point).is_infinity


def point_order(curve: CurveModel, point: CurvePoint, max_order: int = 12) -> Optional[int]:
    _require_on_curve(curve, point)
    current = point
    for order in range(1, max_order + 1):
        if current.is_infinity:
            return order
        current = add_points(current, point)
    return None


def small_torsion_points(curve: CurveModel, config: Optional[CurveConfig] = None) -> list[CurvePoint]:
    """Affine torsion points with integral x of norm at most the search bound."""
    cfg = config or CurveConfig()
    found: list[CurvePoint] = []
    for x in lattice_points(cfg.torsion_search_norm):
        y = eis_sqrt(x * x * x + curve.n)
        if y is None:
            continue
        for candidate_y in ((y, -y) if y else (y,)):
            point = CurvePoint(FieldElem.of(x), FieldElem.of(candidate_y))
            if point_order(curve, point, cfg.max_point_order) is not None:
                found.append(point)
    return found


from __future__ import annotations

import random

from rankstab.curve import (
    CurveDomainError,
    CurveModel,
    CurvePoint,
    KPoint,
    ReducedCurve,
    transport_coordinates,
    twist_transport,
    twisted_n,
    untransport,
)
from rankstab.eisenstein import EisInt, FieldElem, eis_sqrt, lattice_points, primes_up_to
from rankstab.quad_ext import QuadElem, make_quad_ext

Q5 = make_quad_ext(5)


def _curve(n: int) -> CurveModel:
    return CurveModel(n=EisInt(n, 0), scaling=FieldElem.of(1))


def test_transport_of_a_point_on_the_twist() -> None:
    curve = _curve(4)
    point = CurvePoint(FieldElem.of(5), FieldElem.of(25))
    assert twisted_n(curve, Q5) == FieldElem.of(500)
    image = twist_transport(curve, Q5, point)
    q = FieldElem.of(5)
    assert image.x == QuadElem.of(1, q)
    assert image.y == QuadElem.sqrt_q(q)
    assert image.satisfies(curve.n_field)
    assert image.conjugate() == -image
    assert untransport(curve, Q5, image) == point


def test_two_torsion_maps_to_two_torsion() -> None:
    curve = _curve(1)
    point = CurvePoint(FieldElem.of(-5), FieldElem.of(0))
    image = twist_transport(curve, Q5, point)
    assert image.y.is_zero()
    assert image.x == QuadElem.of(-1, FieldElem.of(5))


def test_exact_small_height_points_round_trip() -> None:
    curve = _curve(1)
    shifted = twisted_n(curve, Q5).num
    checked = 0
    for x in lattice_points(400):
        y = eis_sqrt(x * x * x + shifted)
        if y is None:
            continue
        point = CurvePoint(FieldElem.of(x), FieldElem.of(y))
        image = twist_transport(curve, Q5, point)
        assert image.satisfies(curve.n_field)
        assert untransport(curve, Q5, image) == point
        checked += 1
    assert checked >= 3

    curve4 = _curve(4)
    for k in (1, 2, 3):
        x = FieldElem.of(5) * k * k
        rhs = x**3 + twisted_n(curve4, Q5)
        root = eis_sqrt(rhs.num) if rhs.is_integral() else None
        if root is None:
            continue
        image = twist_transport(curve4, Q5, CurvePoint(x, FieldElem.of(root)))
        assert image.satisfies(curve4.n_field)


def test_transport_over_residue_fields() -> None:
    rng = random.Random(17)
    primes = [p for p in primes_up_to(200) if p.characteristic not in (2, 3, 5)]
    checked = 0
    while checked < 100:
        prime = rng.choice(primes)
        n = rng.choice((1, 2, 7, 11))
        reduced = ReducedCurve(EisInt(125 * n, 0), prime)
        points = [p for p in reduced.points() if not p.is_infinity]
        if not points:
            continue
        point = rng.choice(points)
        q_bar = reduced.field.element(5)
        image = transport_coordinates(point.x, point.y, q_bar)
        assert image.satisfies(reduced.field.element(n))
        assert image.conjugate() == -image
        assert image.x.c0 * q_bar == point.x
        assert image.y.c1 * q_bar * q_bar == point.y
        checked += 1


def test_transport_rejects_points_off_the_twist() -> None:
    try:
        twist_transport(_curve(4), Q5, CurvePoint(FieldElem.of(1), FieldElem.of(1)))
    except CurveDomainError:
        return
    raise AssertionError("Expected CurveDomainError for a point off the twisted curve.")


def test_untransport_rejects_points_outside_the_image() -> None:
    q = FieldElem.of(5)
    # (0, 2) on y^2 = x^3 + 4 is an F-point, not a transported one
    point = KPoint(QuadElem.of(0, q), QuadElem.of(2, q))
    try:
        untransport(_curve(4), Q5, point)
    except CurveDomainError:
        return
    raise AssertionError("Expected CurveDomainError for a point outside the image.")

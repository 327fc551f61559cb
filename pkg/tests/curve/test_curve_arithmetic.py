from __future__ import annotations

import random

from rankstab.curve import (
    CurveDomainError,
    CurveModel,
    CurvePoint,
    ReducedCurve,
    count_points,
    curve_from_n,
    is_nontorsion,
    multiply_point,
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
from rankstab.eisenstein import LAMBDA, OMEGA, TWO, EisInt, FieldElem, factor, prime_elem, primes_up_to

E1 = CurveModel(n=EisInt(1, 0), scaling=FieldElem.of(1))
E_MINUS_2 = CurveModel(n=EisInt(-2, 0), scaling=FieldElem.of(1))


def _pt(x: int | EisInt, y: int | EisInt) -> CurvePoint:
    return CurvePoint(FieldElem.of(x), FieldElem.of(y))


def test_curve_from_n_clears_sixth_powers() -> None:
    curve = curve_from_n(FieldElem.of(1, 64))
    assert curve.n == EisInt(1, 0)
    assert curve.scaling == FieldElem.of(2)
    assert curve.original_n == FieldElem.of(1, 64)

    assert curve_from_n(5) == CurveModel(n=EisInt(5, 0), scaling=FieldElem.of(1))

    n0 = FieldElem.of(EisInt(2, 0) ** 7 * LAMBDA**13, 7**8)
    minimized = curve_from_n(n0)
    assert minimized.original_n == n0
    assert all(exponent < 6 for _, exponent in factor(minimized.n).factors)


def test_curve_from_n_rejects_zero() -> None:
    try:
        curve_from_n(0)
    except CurveDomainError:
        return
    raise AssertionError("Expected CurveDomainError for n = 0.")


def test_scaling_carries_points_to_the_minimized_model() -> None:
    n0 = FieldElem.of(1, 64)
    curve = curve_from_n(n0)
    raw = CurvePoint(FieldElem.of(2, 4), FieldElem.of(3, 8))
    assert raw.y * raw.y == raw.x**3 + n0
    assert scale_point(raw, curve.scaling) == _pt(2, 3)


def test_chord_tangent_examples() -> None:
    p = _pt(2, 3)
    assert point_add(E1, p, p) == _pt(0, 1)
    assert point_add(E1, p, CurvePoint.infinity()) == p
    assert scalar_mul(E1, 3, p) == _pt(-1, 0)
    assert scalar_mul(E1, 6, p).is_infinity
    assert point_add(E1, p, point_neg(E1, p)).is_infinity
    assert point_neg(E1, p) == scalar_mul(E1, -1, p) == _pt(2, -3)


def test_jacobian_and_affine_multiples_agree() -> None:
    for curve, point in ((E1, _pt(2, 3)), (E_MINUS_2, _pt(3, 5))):
        for k in range(-4, 13):
            assert scalar_mul(curve, k, point) == multiply_point(k, point)


def test_group_law_rejects_off_curve_points() -> None:
    try:
        point_add(E1, _pt(1, 1), _pt(2, 3))
    except CurveDomainError:
        return
    raise AssertionError("Expected CurveDomainError for an off-curve point.")


def test_group_law_axioms_on_exact_points() -> None:
    p = _pt(3, 5)
    q = scalar_mul(E_MINUS_2, 2, p)
    r = zeta_action(E_MINUS_2, p)
    assert point_add(E_MINUS_2, point_add(E_MINUS_2, p, q), r) == point_add(E_MINUS_2, p, point_add(E_MINUS_2, q, r))
    assert point_add(E_MINUS_2, p, q) == point_add(E_MINUS_2, q, p)
    assert on_curve(E_MINUS_2, point_add(E_MINUS_2, q, r))


def test_zeta_and_phi() -> None:
    p = _pt(2, 3)
    assert zeta_action(E1, p) == _pt(2 * OMEGA, 3)
    assert on_curve(E1, zeta_action(E1, p))
    assert phi_endo(E1, _pt(0, 1)).is_infinity

    for curve, point in ((E1, p), (E_MINUS_2, _pt(3, 5))):
        twice = zeta_action(curve, zeta_action(curve, point))
        assert zeta_action(curve, twice) == point
        assert phi_endo(curve, phi_dual_endo(curve, point)) == scalar_mul(curve, 3, point)
        assert phi_dual_endo(curve, phi_endo(curve, point)) == scalar_mul(curve, 3, point)

    q = scalar_mul(E_MINUS_2, 2, _pt(3, 5))
    summed = point_add(E_MINUS_2, _pt(3, 5), q)
    assert zeta_action(E_MINUS_2, summed) == point_add(
        E_MINUS_2, zeta_action(E_MINUS_2, _pt(3, 5)), zeta_action(E_MINUS_2, q)
    )


def test_count_points_examples() -> None:
    seven = prime_elem(EisInt(3, 1))
    assert count_points(E1, seven) == 12
    five = CurveModel(n=EisInt(5, 0), scaling=FieldElem.of(1))
    count = count_points(five, seven)
    assert (count - 8) ** 2 <= 4 * 7
    assert len(reduced_points(1, TWO)) == 5


def test_count_points_rejects_bad_primes() -> None:
    for curve, prime in ((E1, TWO), (CurveModel(n=EisInt(5, 0), scaling=FieldElem.of(1)), prime_elem(5))):
        try:
            count_points(curve, prime)
        except CurveDomainError:
            continue
        raise AssertionError("Expected CurveDomainError for a bad prime.")


def test_counts_respect_weil_and_agree_on_conjugate_primes() -> None:
    for n in (2, 5, 7):
        curve = CurveModel(n=EisInt(n, 0), scaling=FieldElem.of(1))
        by_norm: dict[int, set[int]] = {}
        for prime in primes_up_to(500):
            if prime.characteristic in (2, 3) or prime.characteristic == n:
                continue
            count = count_points(curve, prime)
            assert (count - prime.norm - 1) ** 2 <= 4 * prime.norm
            assert count == len(reduced_points(n, prime))
            by_norm.setdefault(prime.norm, set()).add(count)
        assert all(len(counts) == 1 for counts in by_norm.values())


def test_reduced_group_law_axioms() -> None:
    rng = random.Random(13)
    for norm in (13, 19, 25, 31):
        prime = next(p for p in primes_up_to(40) if p.norm == norm)
        reduced = ReducedCurve(EisInt(2, 0), prime)
        points = reduced.points()
        for _ in range(40):
            p, q, r = (rng.choice(points) for _ in range(3))
            assert reduced.add(reduced.add(p, q), r) == reduced.add(p, reduced.add(q, r))
            assert reduced.add(p, q) == reduced.add(q, p)
            assert reduced.add(p, CurvePoint.infinity()) == p
            assert reduced.add(p, -p).is_infinity
            assert reduced.contains(reduced.phi(p))
            assert reduced.phi(reduced.phi_dual(p)) == reduced.multiply(3, p)
        assert all(reduced.multiply(len(points), p).is_infinity for p in points)


def test_reduction_commutes_with_addition() -> None:
    p = _pt(3, 5)
    q = scalar_mul(E_MINUS_2, 2, p)
    for prime in primes_up_to(100):
        if prime.characteristic in (2, 3):
            continue
        reduced = ReducedCurve(EisInt(-2, 0), prime)
        left = reduced.reduce(point_add(E_MINUS_2, p, q))
        right = reduced.add(reduced.reduce(p), reduced.reduce(q))
        assert left == right


def test_torsion_of_y2_x3_plus_1() -> None:
    bound = torsion_bound(E1)
    assert bound.bound % 12 == 0
    assert len(bound.characteristics) >= 2
    assert not is_nontorsion(E1, _pt(2, 3), bound)
    assert not is_nontorsion(E1, CurvePoint.infinity(), bound)

    torsion = small_torsion_points(E1)
    assert len(torsion) + 1 >= 12
    for point in torsion:
        order = point_order(E1, point)
        assert order is not None and bound.bound % order == 0
        assert scalar_mul(E1, bound.bound, point).is_infinity


def test_nontorsion_point_is_certified() -> None:
    bound = torsion_bound(E_MINUS_2)
    assert is_nontorsion(E_MINUS_2, _pt(3, 5), bound)
    assert point_order(E_MINUS_2, _pt(3, 5)) is None

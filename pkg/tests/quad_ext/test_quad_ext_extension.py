from __future__ import annotations

from rankstab.eisenstein import (
    LAMBDA,
    OMEGA,
    ONE,
    RAMIFIED_PRIME,
    TWO,
    UNITS,
    EisInt,
    FieldElem,
    prime_elem,
    primes_up_to,
    residue_symbol,
)
from rankstab.quad_ext import (
    SPLITTING_TYPES,
    QuadElem,
    QuadExtPreconditionError,
    TrivialExtensionError,
    UnsupportedRamificationError,
    build_sigma,
    make_quad_ext,
    splitting_type,
)

FIVE = prime_elem(5)


def test_make_quad_ext_strips_squares() -> None:
    ext = make_quad_ext(20)
    assert ext.q == EisInt(5, 0)
    assert ext.ramified == (FIVE,)
    assert ext.lambda_unramified


def test_make_quad_ext_accepts_minus_one() -> None:
    ext = make_quad_ext(-1)
    assert ext.q == -ONE
    assert ext.ramified == (TWO,)


def test_make_quad_ext_strips_the_ramified_prime_square() -> None:
    ext = make_quad_ext(15)
    assert ext.q.norm == 25
    assert any(unit * 5 == ext.q for unit in UNITS)
    assert FIVE in ext.ramified


def test_make_quad_ext_rejects_squares() -> None:
    for q_raw in (4, OMEGA, EisInt(-3, 0), EisInt(2, 3) ** 2):
        try:
            make_quad_ext(q_raw)
        except TrivialExtensionError:
            continue
        raise AssertionError(f"Expected TrivialExtensionError for {q_raw}.")


def test_make_quad_ext_rejects_ramification_above_three() -> None:
    for q_raw in (LAMBDA, 3 * LAMBDA * 5):
        try:
            make_quad_ext(q_raw)
        except UnsupportedRamificationError:
            continue
        raise AssertionError(f"Expected UnsupportedRamificationError for {q_raw}.")


def test_splitting_type_examples_for_q5() -> None:
    ext = make_quad_ext(5)
    assert splitting_type(ext, prime_elem(EisInt(3, 1))) == "inert"
    assert splitting_type(ext, FIVE) == "ramified"
    assert splitting_type(ext, TWO) == "split"
    assert splitting_type(ext, RAMIFIED_PRIME) == "inert"


def test_splitting_type_at_two_for_other_generators() -> None:
    assert splitting_type(make_quad_ext(-1), TWO) == "ramified"
    assert splitting_type(make_quad_ext(2), TWO) == "ramified"
    assert splitting_type(make_quad_ext(-7), TWO) == "split"
    # -5 = 3 mod 8 is not a square mod 4
    assert splitting_type(make_quad_ext(-5), TWO) == "ramified"
    # -1+3w is a square mod 4 but not mod 8
    assert splitting_type(make_quad_ext(EisInt(-1, 3)), TWO) == "inert"


def test_chebotarev_inert_fraction_for_q5() -> None:
    ext = make_quad_ext(5)
    kinds = [splitting_type(ext, prime) for prime in primes_up_to(10**4)]
    assert set(kinds) == set(SPLITTING_TYPES)
    unramified = [kind for kind in kinds if kind != "ramified"]
    inert_fraction = unramified.count("inert") / len(unramified)
    assert 0.4 <= inert_fraction <= 0.6


def test_build_sigma_for_q5_r1() -> None:
    ext = make_quad_ext(5)
    sigma = build_sigma(ext, 1)
    assert [prime.value for prime in sigma.S_prime_superset] == [LAMBDA, EisInt(2, 0), EisInt(5, 0)]
    assert [prime.value for prime in sigma.S] == [LAMBDA, EisInt(2, 0)]

    p = prime_elem(EisInt(7, 1))
    assert sigma.is_sigma_unit(EisInt(7, 1)) == (residue_symbol(5, p, 2) == -ONE)
    assert sigma.is_sigma_unit(EisInt(7, 1))
    assert sigma.is_sigma_unit(1)
    assert sigma.is_sigma_unit(FieldElem.of(2, EisInt(3, 1)))
    assert not sigma.is_sigma_unit(5)
    # norm 19, and 5 is a square mod 19
    assert not sigma.is_sigma_unit(EisInt(5, 2))


def test_build_sigma_grows_with_r() -> None:
    ext = make_quad_ext(5)
    base = build_sigma(ext, 1)
    bigger = build_sigma(ext, EisInt(7, 0) * EisInt(5, 2))
    base_values = {prime.value for prime in base.S_prime_superset}
    bigger_values = {prime.value for prime in bigger.S_prime_superset}
    assert base_values <= bigger_values
    assert {prime.value for prime in base.S} < {prime.value for prime in bigger.S}
    for prime in bigger.S:
        assert prime.kind == "ramified" or splitting_type(ext, prime) == "split"


def test_build_sigma_rejects_r_sharing_ramified_primes() -> None:
    try:
        build_sigma(make_quad_ext(5), 10)
    except QuadExtPreconditionError:
        return
    raise AssertionError("Expected QuadExtPreconditionError for r divisible by a ramified prime.")


def test_quad_elem_arithmetic_over_q() -> None:
    q = FieldElem.of(5)
    root = QuadElem.sqrt_q(q)
    assert root * root == QuadElem.of(5, q)
    assert (1 + root) * (1 - root) == QuadElem.of(-4, q)
    x = QuadElem(FieldElem.of(EisInt(3, 1), 7), FieldElem.of(2, EisInt(2, 3)), q)
    assert x * x.inverse() == QuadElem.of(1, q)
    assert (x / root) * root == x
    assert x.conjugate().conjugate() == x
    assert (x * x.conjugate()).c1.is_zero()

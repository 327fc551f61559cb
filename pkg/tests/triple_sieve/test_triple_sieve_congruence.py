from __future__ import annotations

from itertools import islice

from rankstab.eisenstein import LAMBDA, ONE, EisInt, crt_solve, factor, residue_class
from rankstab.quad_ext import SigmaSets, build_sigma, conic_solutions, inert_residue_targets, make_quad_ext
from rankstab.triple_sieve import (
    SievePreconditionError,
    build_congruence_system,
    choose_gamma,
    is_compatible,
    targets_are_units,
    trivial_congruence_system,
)

EXT = make_quad_ext(5)
SIGMA = build_sigma(EXT, 1)


def test_choose_gamma_is_the_product_over_s() -> None:
    gamma = choose_gamma(SIGMA)
    assert gamma == 2 * LAMBDA
    assert {prime.value for prime in factor(gamma).support} == {prime.value for prime in SIGMA.S}


def test_choose_gamma_of_empty_s_is_one() -> None:
    empty = SigmaSets(ext=EXT, r=ONE, S=(), S_prime_superset=())
    assert choose_gamma(empty) == ONE


def test_congruence_system_for_q5() -> None:
    system = build_congruence_system(EXT, SIGMA, 1, depth_n=5)
    assert {prime.value for prime in system.support} == {LAMBDA, EisInt(2, 0), EisInt(5, 0)}
    assert system.beta == 2 * (2 * LAMBDA) ** 15
    assert targets_are_units(system)
    assert is_compatible(system)
    near_s = LAMBDA**5 * 2**5
    assert ((system.u2.representative - 1) % near_s).is_zero()
    assert ((system.u3.representative - 1) % near_s).is_zero()
    assert ((system.u1.representative - 1) % near_s).is_zero()
    assert system.conic is not None
    assert dict((prime.value, depth) for prime, depth in system.depth_map) == {LAMBDA: 5, EisInt(2, 0): 5}


def test_congruence_system_rejects_shallow_depth() -> None:
    try:
        build_congruence_system(EXT, SIGMA, 1, depth_n=4)
    except SievePreconditionError as exc:
        assert exc.code == "sieve_precondition"
        return
    raise AssertionError("Expected SievePreconditionError for depth 4.")


def test_congruence_system_rejects_foreign_r() -> None:
    try:
        build_congruence_system(EXT, SIGMA, 7, depth_n=5)
    except SievePreconditionError:
        return
    raise AssertionError("Expected SievePreconditionError for r outside the Sigma sets.")


def test_compatibility_holds_for_many_target_choices() -> None:
    system = build_congruence_system(EXT, SIGMA, 1, depth_n=5)
    near_s = LAMBDA**5 * 2**5
    targets = inert_residue_targets(EXT)
    for solution in islice(conic_solutions(system.beta, targets), 10):
        u1 = crt_solve([residue_class(1 - system.beta, near_s), solution.u1])
        u2 = crt_solve([residue_class(1, near_s), solution.u2])
        u3 = crt_solve([residue_class(1, near_s), solution.u3])
        assert u1.modulus == u2.modulus == u3.modulus
        residual = u1.representative + system.beta * u2.representative - u3.representative
        assert (residual % u2.modulus).is_zero()


def test_trivial_system_has_no_constraints() -> None:
    system = trivial_congruence_system(2)
    assert system.modulus == ONE
    assert system.depth_n == 0
    assert system.gamma_power == ONE
    assert system.meets_targets(EisInt(3, 1), EisInt(2, 0), EisInt(7, 1))
    assert is_compatible(system)



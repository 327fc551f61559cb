from __future__ import annotations

from rankstab.eisenstein import EisInt, is_power_mod, prime_elem, residue_field
from rankstab.quad_ext import (
    QuadExtConfig,
    TargetSystem,
    check_conic_solution,
    conic_solutions,
    conic_solvable_units,
    coset_witnesses,
    inert_modulus,
    inert_residue_targets,
    make_quad_ext,
    splitting_type,
)


def test_inert_targets_for_q5_are_the_nonsquares_mod_5() -> None:
    ext = make_quad_ext(5)
    system = inert_residue_targets(ext)
    assert system.modulus == EisInt(5, 0)
    assert len(system.targets) == 12
    field = residue_field(prime_elem(5))
    for target in system.targets:
        assert field.quadratic_character(field.from_eis(target.representative)) == -1


def test_inert_targets_for_minus_one_live_mod_8() -> None:
    ext = make_quad_ext(-1)
    system = inert_residue_targets(ext)
    assert system.modulus == inert_modulus(ext) == EisInt(8, 0)
    assert 1 <= len(system.targets) <= 12
    for target in system.targets:
        assert not is_power_mod(target.representative, 8, 2)


def test_every_target_yields_inert_witness_primes() -> None:
    for q in (5, -1, EisInt(2, 3)):
        ext = make_quad_ext(q)
        system = inert_residue_targets(ext)
        for target in system.targets:
            witnesses = coset_witnesses(target.representative, system.modulus, 3, 4000)
            assert len(witnesses) == 3
            assert all(splitting_type(ext, prime) == "inert" for prime in witnesses)


def test_target_cap_is_respected() -> None:
    system = inert_residue_targets(make_quad_ext(5), config=QuadExtConfig(max_targets=4))
    assert len(system.targets) == 4


def test_conic_for_q5_keeps_t1_equal_t3() -> None:
    ext = make_quad_ext(5)
    solution = conic_solvable_units(ext, 2)
    assert solution.t1 == solution.t3
    assert check_conic_solution(solution)
    m = solution.modulus
    u1, u2, u3 = solution.u1.representative, solution.u2.representative, solution.u3.representative
    assert ((u1 + 2 * u2 - u3) % m).is_zero()


def test_conic_for_minus_one_with_beta_two_needs_distinct_t1_t3() -> None:
    ext = make_quad_ext(-1)
    system = inert_residue_targets(ext)
    solution = conic_solvable_units(ext, 2, system=system)
    assert solution.t1 != solution.t3
    assert check_conic_solution(solution)


def test_conic_solutions_are_all_valid() -> None:
    ext = make_quad_ext(5)
    beta = EisInt(2, 0) * EisInt(2, -2) ** 15
    count = 0
    for solution in conic_solutions(beta, inert_residue_targets(ext)):
        assert check_conic_solution(solution)
        count += 1
        if count == 25:
            break
    assert count == 25


def test_empty_target_system_has_no_conic_solutions() -> None:
    system = TargetSystem(modulus=EisInt(5, 0), targets=())
    assert list(conic_solutions(2, system)) == []

from __future__ import annotations

from typing import Iterator, Optional

from rankstab.eisenstein import (
    ONE,
    EisInt,
    PrimeElem,
    coset_points,
    euclid_gcd,
    is_prime_element,
    normalize,
    prime_elem,
    residue_class,
    unit_residues,
)

from .errors import ConicSearchError, InertTargetSearchError, QuadExtPreconditionError
from .extension import splitting_type
from .models import ConicSolution, QuadExt, QuadExtConfig, TargetSystem


def inert_modulus(ext: QuadExt, depth: int = 3) -> EisInt:
    modulus = ONE
    for prime in ext.ramified:
        exponent = depth if prime.characteristic == 2 else 1
        modulus = modulus * prime.value**exponent
    return normalize(modulus)


def coset_witnesses(
    residue: EisInt,
    modulus: EisInt,
    count: int,
    search_limit: int,
) -> list[PrimeElem]:
    """The first `count` primes congruent to residue mod modulus, in enumeration order."""
    found: list[PrimeElem] = []
    for examined, candidate in enumerate(coset_points(residue, modulus)):
        if examined >= search_limit:
            break
        if candidate.is_zero() or candidate.is_unit():
            continue
        if is_prime_element(candidate):
            found.append(prime_elem(candidate))
            if len(found) == count:
                break
    return found


def inert_residue_targets(
    ext: QuadExt,
    depth: Optional[int] = None,
    config: Optional[QuadExtConfig] = None,
) -> TargetSystem:
    cfg = config or QuadExtConfig()
    depth = cfg.two_adic_depth if depth is None else depth
    if not ext.ramified:
        raise QuadExtPreconditionError("K/F has no ramified prime; no inert residue prescription exists.")
    modulus = inert_modulus(ext, depth)

    targets = []
    for residue in unit_residues(modulus):
        witnesses = coset_witnesses(residue, modulus, cfg.witness_count, cfg.witness_search_limit)
        if len(witnesses) < cfg.witness_count:
            raise InertTargetSearchError(
                "Not enough witness primes in residue class.",
                context=f"{residue} mod {modulus}",
            )
        kinds = {splitting_type(ext, prime) for prime in witnesses}
        if kinds == {"inert"}:
            targets.append(residue_class(residue, modulus))
            if len(targets) == cfg.max_targets:
                break
        elif kinds != {"split"}:
            raise InertTargetSearchError(
                "Splitting is not constant on a residue class; modulus too coarse.",
                context=f"{residue} mod {modulus}: {sorted(kinds)}",
            )
    if not targets:
        raise InertTargetSearchError("No inert residue class found.", context=str(modulus))
    return TargetSystem(modulus=modulus, targets=tuple(targets))


def conic_solutions(beta: EisInt | int, system: TargetSystem) -> Iterator[ConicSolution]:
    """Unit solutions of t1 x^2 + beta t2 y^2 = t3 z^2 mod M, t1 = t3 first."""
    beta = EisInt.coerce(beta)
    modulus = system.modulus
    if beta.is_zero():
        raise QuadExtPreconditionError("beta must be nonzero.")

    square_roots: dict[EisInt, EisInt] = {}
    for x in unit_residues(modulus):
        square_roots.setdefault((x * x) % modulus, x)
    squares = sorted(square_roots, key=lambda s: s.sort_key)
    targets = [target.representative for target in system.targets]
    # t -> {t*s mod M: s}
    scaled = {t: {(t * s) % modulus: s for s in squares} for t in targets}

    def solve(t1: EisInt, t2: EisInt, candidates: list[EisInt]) -> Iterator[ConicSolution]:
        for s1 in squares:
            left = (t1 * s1) % modulus
            for s2 in squares:
                w = (left + beta * t2 * s2) % modulus
                for t3 in candidates:
                    s3 = scaled[t3].get(w)
                    if s3 is None:
                        continue
                    yield ConicSolution(
                        modulus=modulus,
                        beta=beta,
                        t1=residue_class(t1, modulus),
                        t2=residue_class(t2, modulus),
                        t3=residue_class(t3, modulus),
                        x=square_roots[s1],
                        y=square_roots[s2],
                        z=square_roots[s3],
                        u1=residue_class(t1 * s1, modulus),
                        u2=residue_class(t2 * s2, modulus),
                        u3=residue_class(t3 * s3, modulus),
                    )

    for t1 in targets:
        for t2 in targets:
            yield from solve(t1, t2, [t1])
    for t1 in targets:
        for t2 in targets:
            yield from solve(t1, t2, [t3 for t3 in targets if t3 != t1])


def conic_solvable_units(
    ext: QuadExt,
    beta: EisInt | int,
    system: Optional[TargetSystem] = None,
    config: Optional[QuadExtConfig] = None,
) -> ConicSolution:
    system = system or inert_residue_targets(ext, config=config)
    for solution in conic_solutions(beta, system):
        return solution
    raise ConicSearchError(
        "No unit solution of the conic modulo the inert modulus.",
        context=f"beta={beta} modulus={system.modulus}",
    )


def check_conic_solution(solution: ConicSolution) -> bool:
    m = solution.modulus
    x, y, z = solution.x, solution.y, solution.z
    lhs = solution.t1.representative * x * x + solution.beta * solution.t2.representative * y * y
    rhs = solution.t3.representative * z * z
    units = m.is_unit() or all(euclid_gcd(value, m) == ONE for value in (x, y, z))
    return units and ((lhs - rhs) % m).is_zero()

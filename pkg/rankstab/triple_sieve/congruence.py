from __future__ import annotations

from typing import Iterable, Iterator, Optional

from rankstab.eisenstein import (
    ONE,
    CrtConflictError,
    EisInt,
    PrimeElem,
    ResidueClass,
    crt_solve,
    divides,
    factor,
    normalize,
    residue_class,
)
from rankstab.quad_ext import (
    ConicSolution,
    QuadExt,
    QuadExtConfig,
    SigmaSets,
    conic_solutions,
    inert_residue_targets,
)

from .errors import CongruenceAssemblyError, SievePreconditionError
from .models import CongruenceSystem, SieveConfig

MIN_DEPTH = 5


def choose_gamma(sigma: SigmaSets) -> EisInt:
    """One copy of every prime in S; 1 for empty S."""
    gamma = ONE
    for prime in sigma.S:
        gamma = gamma * prime.value
    return normalize(gamma)


def trivial_congruence_system(beta: EisInt | int, r: EisInt | int = 1) -> CongruenceSystem:
    """C = 1 with no targets; used by the raw sieve mode."""
    beta = EisInt.coerce(beta)
    if beta.is_zero():
        raise SievePreconditionError("beta must be nonzero.")
    anything = residue_class(0, ONE)
    return CongruenceSystem(
        modulus=ONE,
        u1=anything,
        u2=anything,
        u3=anything,
        beta=beta,
        r=EisInt.coerce(r),
        gamma=ONE,
        depth_n=0,
        depth_map=(),
    )


def _inert_candidates(
    ext: QuadExt,
    beta: EisInt,
    config: Optional[QuadExtConfig],
) -> Iterator[Optional[ConicSolution]]:
    if not ext.ramified:
        yield None
        return
    yield from conic_solutions(beta, inert_residue_targets(ext, config=config))


def _modulus_support(modulus: EisInt, hints: Iterable[PrimeElem]) -> tuple[PrimeElem, ...]:
    if modulus.is_unit():
        return ()
    return factor(modulus, hints).support


def build_congruence_system(
    ext: QuadExt,
    sigma: SigmaSets,
    r: EisInt | int,
    depth_n: int = MIN_DEPTH,
    quad_config: Optional[QuadExtConfig] = None,
    sieve_config: Optional[SieveConfig] = None,
) -> CongruenceSystem:
    cfg = sieve_config or SieveConfig()
    r = EisInt.coerce(r)
    if depth_n < MIN_DEPTH:
        raise SievePreconditionError("depth_n below the cube-Hensel threshold at 1-w.", context=depth_n)
    if r != sigma.r:
        raise SievePreconditionError("r does not match the Sigma sets.", context=f"{r} vs {sigma.r}")

    gamma = choose_gamma(sigma)
    beta = 2 * r * gamma ** (3 * depth_n)
    depth_map = tuple((prime, depth_n) for prime in sigma.S)
    s_modulus = ONE
    for prime, exponent in depth_map:
        s_modulus = s_modulus * prime.value**exponent
    s_modulus = normalize(s_modulus)
    # p2 = p3 = 1 near S, hence p1 = 1 - beta
    s_targets = (
        residue_class(ONE - beta, s_modulus),
        residue_class(ONE, s_modulus),
        residue_class(ONE, s_modulus),
    )
    hints = tuple(sigma.S) + tuple(ext.ramified)

    attempts: list[str] = []
    for index, solution in enumerate(_inert_candidates(ext, beta, quad_config)):
        if index >= cfg.max_congruence_attempts:
            break
        inert_targets: tuple[ResidueClass, ...] = () if solution is None else (solution.u1, solution.u2, solution.u3)
        try:
            merged = [
                crt_solve([s_target, *inert_targets[position : position + 1]])
                for position, s_target in enumerate(s_targets)
            ]
        except CrtConflictError as exc:
            attempts.append(f"attempt {index}: {exc.message}")
            continue

        modulus = merged[1].modulus
        support = _modulus_support(modulus, hints)
        system = CongruenceSystem(
            modulus=modulus,
            u1=merged[0],
            u2=merged[1],
            u3=merged[2],
            beta=beta,
            r=r,
            gamma=gamma,
            depth_n=depth_n,
            depth_map=depth_map,
            support=support,
            sigma=sigma,
            conic=solution,
        )
        if not targets_are_units(system):
            attempts.append(f"attempt {index}: a target is not a unit mod {modulus}")
            continue
        if not is_compatible(system):
            attempts.append(f"attempt {index}: u1 + beta*u2 != u3 mod {modulus}")
            continue
        return system

    raise CongruenceAssemblyError("No admissible target choice.", context=attempts)


def targets_are_units(system: CongruenceSystem) -> bool:
    return not any(
        divides(prime.value, target.representative) for prime in system.support for target in system.targets
    )


def is_compatible(system: CongruenceSystem) -> bool:
    u1, u2, u3 = (target.representative for target in system.targets)
    return ((u1 + system.beta * u2 - u3) % system.modulus).is_zero()

from __future__ import annotations

import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, Optional

from rankstab.eisenstein import UNITS, EisInt, coset_points, is_prime_element, normalize

from .errors import SieveExhaustedError, SievePreconditionError
from .models import CongruenceSystem, PrimeTriple, SieveConfig


def _is_prime(x: EisInt) -> bool:
    return not x.is_zero() and not x.is_unit() and is_prime_element(x)


def canonical_member(system: CongruenceSystem, p1: EisInt, p2: EisInt, p3: EisInt) -> tuple[EisInt, EisInt, EisInt]:
    """Representative of the diagonal unit orbit among members meeting the targets."""
    members = [(unit * p1, unit * p2, unit * p3) for unit in UNITS]
    members = [member for member in members if system.meets_targets(*member)]
    if not members:
        return (p1, p2, p3)
    for member in members:
        if normalize(member[1]) == member[1]:
            return member
    return min(members, key=lambda member: (member[1].a, member[1].b, member[0].a, member[0].b))


def check_triple(system: CongruenceSystem, triple: PrimeTriple) -> bool:
    return (
        triple.beta == system.beta
        and triple.identity_holds()
        and all(_is_prime(value) for value in (triple.p1, triple.p2, triple.p3))
        and system.meets_targets(triple.p1, triple.p2, triple.p3)
    )


def _shard_candidates(
    system: CongruenceSystem,
    norm_bound: int,
    shard: int,
    shard_count: int,
    seed: int,
) -> Iterator[EisInt]:
    for index, p2 in enumerate(coset_points(system.u2.representative, system.modulus, norm_bound)):
        if (index + seed) % shard_count == shard and _is_prime(p2):
            yield p2


def search_shard(
    system: CongruenceSystem,
    norm_bound: int,
    max_results: int,
    shard: int = 0,
    shard_count: int = 1,
    seed: int = 0,
) -> list[PrimeTriple]:
    """Triples whose p2 falls in this shard, in (p2, p1) enumeration order."""
    found: list[PrimeTriple] = []
    u1, u3 = system.u1.representative, system.u3.representative
    for p2 in _shard_candidates(system, norm_bound, shard, shard_count, seed):
        for p1 in coset_points(u1, system.modulus, norm_bound):
            if not _is_prime(p1):
                continue
            p3 = p1 + system.beta * p2
            if not ((p3 - u3) % system.modulus).is_zero() or not _is_prime(p3):
                continue
            if canonical_member(system, p1, p2, p3) != (p1, p2, p3):
                continue
            found.append(PrimeTriple(p1=p1, p2=p2, p3=p3, beta=system.beta))
            if len(found) >= max_results:
                return found
    return found


def default_norm_bound(system: CongruenceSystem) -> int:
    return system.modulus.norm**2


def sieve_triples(
    system: CongruenceSystem,
    r: Optional[EisInt | int] = None,
    norm_bound: Optional[int] = None,
    max_results: Optional[int] = None,
    seed: Optional[int] = None,
    config: Optional[SieveConfig] = None,
) -> list[PrimeTriple]:
    cfg = config or SieveConfig()
    if r is not None and EisInt.coerce(r) != system.r:
        raise SievePreconditionError("r does not match the congruence system.", context=f"{r} vs {system.r}")
    bound = norm_bound if norm_bound is not None else cfg.norm_bound
    bound = bound if bound is not None else default_norm_bound(system)
    limit = max_results if max_results is not None else cfg.max_results
    seed = cfg.seed if seed is None else seed
    if bound < default_norm_bound(system):
        raise SievePreconditionError("norm_bound must be at least N(C)^2.", context=f"{bound} < {default_norm_bound(system)}")
    if limit < 1:
        raise SievePreconditionError("max_results must be at least 1.", context=limit)

    shard_count = cfg.threads
    started = time.time() * 1000
    if shard_count == 1:
        found = search_shard(system, bound, limit, 0, 1, seed)
        _log(f"shard_done shard=0 triples={len(found)}")
    else:
        found = []
        with ProcessPoolExecutor(max_workers=shard_count) as executor:
            futures = [
                executor.submit(search_shard, system, bound, limit, shard, shard_count, seed)
                for shard in range(shard_count)
            ]
            for shard, future in enumerate(futures):
                shard_found = future.result()
                _log(f"shard_done shard={shard} triples={len(shard_found)}")
                found.extend(shard_found)

    found = sorted(set(found), key=lambda triple: triple.sort_key)[:limit]
    duration_ms = int(time.time() * 1000 - started)
    _log(f"sieve_done triples={len(found)} norm_bound={bound} shards={shard_count} duration_ms={duration_ms}")
    if not found:
        raise SieveExhaustedError(
            "No prime triple within bounds; raise norm_bound.",
            context=f"norm_bound={bound} modulus={system.modulus}",
        )
    return found


def _log(message: str) -> None:
    print(f"[sieve] {message}", file=sys.stderr)

from __future__ import annotations

from typing import Iterable

from rankstab.eisenstein import (
    OMEGA,
    OMEGA2,
    ONE,
    RAMIFIED_PRIME,
    TWO,
    EisInt,
    FieldElem,
    PrimeElem,
    factor,
    is_power_mod,
    residue_symbol,
)

from .errors import QuadExtPreconditionError, TrivialExtensionError, UnsupportedRamificationError
from .models import QuadExt, SigmaSets

SPLITTING_TYPES = ("split", "inert", "ramified")

# unit squares in Z[w]
_SQUARE_UNITS = (ONE, OMEGA, OMEGA2)


def make_quad_ext(q_raw: EisInt | int, two_adic_depth: int = 3) -> QuadExt:
    q_raw = EisInt.coerce(q_raw)
    if q_raw.is_zero():
        raise QuadExtPreconditionError("q must be nonzero.")
    factorization = factor(q_raw)
    q = ONE if factorization.unit in _SQUARE_UNITS else -ONE
    odd_support: list[PrimeElem] = []
    for prime, exponent in factorization.factors:
        if exponent % 2:
            odd_support.append(prime)
            q = q * prime.value

    if q == ONE:
        raise TrivialExtensionError("q is a square in F; K = F.", context=str(q_raw))
    if any(prime.kind == "ramified" for prime in odd_support):
        raise UnsupportedRamificationError(
            "1-w ramifies in F(sqrt q); choose q with even valuation at 1-w.",
            context=str(q_raw),
        )

    ramified = list(odd_support)
    if not any(prime.value == TWO.value for prime in odd_support):
        if _two_adic_class(q, two_adic_depth) == "ramified":
            ramified.append(TWO)
    ramified.sort(key=lambda prime: prime.sort_key)
    return QuadExt(q=q, ramified=tuple(ramified), lambda_unramified=True)


def _two_adic_class(q: EisInt, depth: int) -> str:
    if is_power_mod(q, TWO.value**depth, 2):
        return "split"
    if is_power_mod(q, TWO.value**2, 2):
        return "inert"
    return "ramified"


def splitting_type(ext: QuadExt, prime: PrimeElem) -> str:
    if ext.is_ramified(prime):
        return "ramified"
    if prime.value == TWO.value:
        return _two_adic_class(ext.q, 3)
    symbol = residue_symbol(ext.q, prime, 2)
    if symbol == ONE:
        return "split"
    if symbol == -ONE:
        return "inert"
    # q squarefree, so a prime dividing q is ramified
    return "ramified"


def build_sigma(ext: QuadExt, r: EisInt | int) -> SigmaSets:
    r = EisInt.coerce(r)
    if r.is_zero():
        raise QuadExtPreconditionError("r must be nonzero.")
    r_support = factor(r).support if not r.is_unit() else ()
    shared = [prime for prime in r_support if ext.is_ramified(prime)]
    if shared:
        raise QuadExtPreconditionError(
            "r must be coprime to the primes ramified in K.",
            context=", ".join(str(prime) for prime in shared),
        )

    superset: dict[EisInt, PrimeElem] = {RAMIFIED_PRIME.value: RAMIFIED_PRIME, TWO.value: TWO}
    for prime in factor(ext.q).support:
        superset[prime.value] = prime
    for prime in r_support:
        superset[prime.value] = prime
    ordered = tuple(sorted(superset.values(), key=lambda prime: prime.sort_key))
    s_members = tuple(
        prime for prime in ordered if prime.kind == "ramified" or splitting_type(ext, prime) == "split"
    )
    return SigmaSets(ext=ext, r=r, S=s_members, S_prime_superset=ordered)


def sigma_unit_offenders(
    sigma: SigmaSets,
    x: FieldElem | EisInt | int,
    hints: Iterable[PrimeElem] = (),
) -> list[PrimeElem]:
    """Primes in the support of x that are neither in S nor inert in K."""
    x = FieldElem.coerce(x)
    if x.is_zero():
        raise QuadExtPreconditionError("Zero is not a Sigma-unit.")
    hints = tuple(hints)
    offenders: list[PrimeElem] = []
    for part in (x.num, x.den):
        if part.is_unit():
            continue
        for prime in factor(part, hints=hints).support:
            if sigma.contains(prime):
                continue
            if splitting_type(sigma.ext, prime) != "inert":
                offenders.append(prime)
    return offenders

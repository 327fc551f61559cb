from __future__ import annotations

from typing import Iterable, Optional

from rankstab.eisenstein import EisInt, FieldElem, PrimeElem, factor, is_local_power, prime_elem
from rankstab.quad_ext import sigma_unit_offenders

from .errors import TwistParamsInvalidError
from .models import CongruenceSystem, PrimeTriple, TwistParams
from .sieve import check_triple


def _triple_hints(system: CongruenceSystem, triple: PrimeTriple) -> tuple[PrimeElem, ...]:
    hints: list[PrimeElem] = list(triple.primes)
    if system.sigma is not None:
        hints.extend(system.sigma.S)
        hints.extend(system.sigma.S_prime_superset)
    return tuple(hints)


def derive_twist_params(
    triple: PrimeTriple,
    system: CongruenceSystem,
    r: Optional[EisInt | int] = None,
) -> TwistParams:
    """a = p1/p3, b = gamma^(3n) p2/p3 and t = ab, with every postcondition re-checked."""
    r = system.r if r is None else EisInt.coerce(r)
    if r != system.r:
        raise TwistParamsInvalidError("r does not match the congruence system.", context=f"{r} vs {system.r}")
    if not check_triple(system, triple):
        raise TwistParamsInvalidError("Triple does not satisfy the congruence system.", context=triple.to_json())

    a = FieldElem.of(triple.p1, triple.p3)
    b = FieldElem.of(system.gamma_power * triple.p2, triple.p3)
    t = a * b
    if a + 2 * r * b != FieldElem.of(1):
        raise TwistParamsInvalidError("a + 2rb != 1; beta is not 2r*gamma^(3n).", context=str(system.beta))

    sigma = system.sigma
    if sigma is not None:
        hints = _triple_hints(system, triple)
        for name, value in (("a", a), ("b", b)):
            offenders = sigma_unit_offenders(sigma, value, hints)
            if offenders:
                raise TwistParamsInvalidError(
                    f"{name} is not a Sigma-unit.",
                    context=", ".join(str(prime) for prime in offenders),
                )
        for prime in sigma.S:
            if not is_local_power(t, prime, 3):
                raise TwistParamsInvalidError("t is not a local cube at a prime of S.", context=str(prime))
    return TwistParams(a=a, b=b, t=t, r=r, source=triple)


def twist_class_key(t: FieldElem | EisInt | int, hints: Iterable[PrimeElem] = ()) -> tuple[tuple[int, int, int], ...]:
    """Exponents mod 3 of the ideal factorization of t; equal keys for twists differing by a cube up to units."""
    t = FieldElem.coerce(t)
    hints = tuple(hints)
    exponents: dict[EisInt, int] = {}
    for part, sign in ((t.num, 1), (t.den, -1)):
        if part.is_unit():
            continue
        for prime, exponent in factor(part, hints).factors:
            exponents[prime.value] = exponents.get(prime.value, 0) + sign * exponent
    key = [(value.a, value.b, exponent % 3) for value, exponent in exponents.items() if exponent % 3]
    return tuple(sorted(key))


def twist_params_hints(params: TwistParams) -> tuple[PrimeElem, ...]:
    triple = params.source
    return tuple(prime_elem(value) for value in (triple.p1, triple.p2, triple.p3))

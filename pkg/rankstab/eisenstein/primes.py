from __future__ import annotations

from functools import lru_cache
from math import isqrt
from typing import Iterable

from sympy import factorint, isprime, primerange
from sympy.ntheory import sqrt_mod

from .arithmetic import euclid_gcd, normalize
from .errors import EisensteinDomainError
from .models import LAMBDA, EisensteinConfig, EisInt, Factorization, PrimeElem

RAMIFIED_PRIME = PrimeElem(value=LAMBDA, norm=3, kind="ramified")
TWO = PrimeElem(value=EisInt(2, 0), norm=4, kind="inert")


@lru_cache(maxsize=1)
def _default_norm_limit() -> int:
    return EisensteinConfig.from_runtime_file().factor_norm_limit


@lru_cache(maxsize=4096)
def split_primes(p: int) -> tuple[PrimeElem, PrimeElem]:
    if p % 3 != 1 or not isprime(p):
        raise EisensteinDomainError("Rational prime does not split in Z[w].", context=p)
    root = sqrt_mod(-3, p)
    w = ((root - 1) * pow(2, -1, p)) % p
    first = euclid_gcd(EisInt(p, 0), EisInt(w, -1))
    second = normalize(first.conjugate())
    ordered = sorted((first, second), key=lambda x: x.sort_key)
    return tuple(PrimeElem(value=value, norm=p, kind="split") for value in ordered)


def primes_over(p: int) -> tuple[PrimeElem, ...]:
    if p == 3:
        return (RAMIFIED_PRIME,)
    if p % 3 == 2:
        return (PrimeElem(value=EisInt(p, 0), norm=p * p, kind="inert"),)
    return split_primes(p)


def prime_elem(x: EisInt | int) -> PrimeElem:
    x = EisInt.coerce(x)
    if x.is_zero() or x.is_unit():
        raise EisensteinDomainError("Zero and units are not primes.", context=str(x))
    n = x.norm
    if isprime(n):
        kind = "ramified" if n == 3 else "split"
        return PrimeElem(value=normalize(x), norm=n, kind=kind)
    root = isqrt(n)
    if root * root == n and root % 3 == 2 and isprime(root):
        normalized = normalize(x)
        if normalized == EisInt(root, 0):
            return PrimeElem(value=normalized, norm=n, kind="inert")
    raise EisensteinDomainError("Element is not prime.", context=str(x))


@lru_cache(maxsize=1 << 16)
def is_prime_element(x: EisInt) -> bool:
    x = EisInt.coerce(x)
    if x.is_zero() or x.is_unit():
        raise EisensteinDomainError("Primality is undefined for zero and units.", context=str(x))
    n = x.norm
    if isprime(n):
        return True
    root = isqrt(n)
    if root * root != n or root % 3 != 2 or not isprime(root):
        return False
    return normalize(x) == EisInt(root, 0)


def factor(
    x: EisInt | int,
    hints: Iterable[PrimeElem] = (),
    norm_limit: int | None = None,
) -> Factorization:
    x = EisInt.coerce(x)
    if x.is_zero():
        raise EisensteinDomainError("Cannot factor zero.")
    limit = norm_limit if norm_limit is not None else _default_norm_limit()

    exponents: dict[EisInt, int] = {}
    primes: dict[EisInt, PrimeElem] = {}
    rest = x
    for hint in hints:
        rest = _divide_out(rest, hint, exponents, primes)

    if rest.norm > 1:
        if rest.norm > limit:
            raise EisensteinDomainError(
                "Norm too large to factor without prime hints.",
                context=f"norm has {len(str(rest.norm))} digits",
            )
        for p in sorted(factorint(rest.norm)):
            for prime in primes_over(p):
                rest = _divide_out(rest, prime, exponents, primes)

    if not rest.is_unit():
        raise EisensteinDomainError("Factorization left a non-unit cofactor.", context=str(rest))
    ordered = sorted(primes.values(), key=lambda prime: prime.sort_key)
    return Factorization(unit=rest, factors=tuple((prime, exponents[prime.value]) for prime in ordered))


def _divide_out(
    rest: EisInt,
    prime: PrimeElem,
    exponents: dict[EisInt, int],
    primes: dict[EisInt, PrimeElem],
) -> EisInt:
    count = 0
    while True:
        quotient, remainder = divmod(rest, prime.value)
        if not remainder.is_zero():
            break
        rest = quotient
        count += 1
    if count:
        exponents[prime.value] = exponents.get(prime.value, 0) + count
        primes[prime.value] = prime
    return rest


@lru_cache(maxsize=32)
def primes_up_to(max_norm: int) -> tuple[PrimeElem, ...]:
    found: list[PrimeElem] = []
    for p in primerange(2, max_norm + 1):
        if p % 3 == 2 and p * p > max_norm:
            continue
        found.extend(primes_over(int(p)))
    return tuple(sorted(found, key=lambda prime: prime.sort_key))

from __future__ import annotations

import cmath
import math
import re

from .errors import EisensteinDomainError, EisensteinParseError
from .models import LAMBDA, ONE, UNITS, ZERO, EisInt

_SQRT3 = math.sqrt(3.0)
_TERM = re.compile(r"([+-]?)(\d*)(w?)")
_FLOAT_SAFE_NORM = 2**50


def lambda_divides(x: EisInt) -> bool:
    # w = 1 mod (1 - w)
    return (x.a + x.b) % 3 == 0


def divides(divisor: EisInt | int, x: EisInt | int) -> bool:
    divisor = EisInt.coerce(divisor)
    x = EisInt.coerce(x)
    if divisor.is_zero():
        return x.is_zero()
    return (x % divisor).is_zero()


def exact_div(x: EisInt | int, divisor: EisInt | int) -> EisInt:
    x = EisInt.coerce(x)
    divisor = EisInt.coerce(divisor)
    quotient, remainder = divmod(x, divisor)
    if not remainder.is_zero():
        raise EisensteinDomainError("Division is not exact.", context=f"{x} / {divisor}")
    return quotient


def valuation(x: EisInt | int, prime: EisInt) -> int:
    x = EisInt.coerce(x)
    if x.is_zero():
        raise EisensteinDomainError("Valuation of zero is undefined.")
    count = 0
    while True:
        quotient, remainder = divmod(x, prime)
        if not remainder.is_zero():
            return count
        x = quotient
        count += 1


def strip_prime(x: EisInt, prime: EisInt) -> EisInt:
    while True:
        quotient, remainder = divmod(x, prime)
        if not remainder.is_zero():
            return x
        x = quotient


def is_primary(x: EisInt) -> bool:
    return x.a % 3 == 2 and x.b % 3 == 0


def primary_associate(x: EisInt) -> EisInt:
    for unit in UNITS:
        candidate = unit * x
        if is_primary(candidate):
            return candidate
    raise EisensteinDomainError("Element has no primary associate (divisible by 1-w).", context=str(x))


def normalize(x: EisInt | int) -> EisInt:
    x = EisInt.coerce(x)
    if x.is_zero():
        return ZERO
    exponent = 0
    while lambda_divides(x):
        x = exact_div(x, LAMBDA)
        exponent += 1
    base = ONE if x.is_unit() else primary_associate(x)
    return LAMBDA**exponent * base


def euclid_gcd(x: EisInt | int, y: EisInt | int) -> EisInt:
    x = EisInt.coerce(x)
    y = EisInt.coerce(y)
    if x.is_zero() and y.is_zero():
        raise EisensteinDomainError("gcd(0, 0) is undefined.")
    while not y.is_zero():
        x, y = y, x % y
    return normalize(x)


def extended_gcd(x: EisInt | int, y: EisInt | int) -> tuple[EisInt, EisInt, EisInt]:
    x = EisInt.coerce(x)
    y = EisInt.coerce(y)
    if x.is_zero() and y.is_zero():
        raise EisensteinDomainError("gcd(0, 0) is undefined.")
    old_r, r = x, y
    old_s, s = ONE, ZERO
    old_t, t = ZERO, ONE
    while not r.is_zero():
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    g = normalize(old_r)
    scale = exact_div(g, old_r)
    return g, old_s * scale, old_t * scale


def inverse_mod(x: EisInt | int, modulus: EisInt | int) -> EisInt:
    modulus = EisInt.coerce(modulus)
    if modulus.is_unit():
        return ZERO
    g, s, _ = extended_gcd(x, modulus)
    if g != ONE:
        raise EisensteinDomainError("Element is not invertible modulo the modulus.", context=f"{x} mod {modulus}")
    return s % modulus


def eis_sqrt(x: EisInt | int) -> EisInt | None:
    x = EisInt.coerce(x)
    if x.is_zero():
        return ZERO
    n = x.norm
    root_norm = math.isqrt(n)
    if root_norm * root_norm != n:
        return None
    if n < _FLOAT_SAFE_NORM:
        return _float_seeded_sqrt(x)
    return _factored_sqrt(x)


def _float_seeded_sqrt(x: EisInt) -> EisInt | None:
    approx = cmath.sqrt(complex(x.a - x.b / 2.0, x.b * _SQRT3 / 2.0))
    v = 2.0 * approx.imag / _SQRT3
    u = approx.real + v / 2.0
    base_u, base_v = round(u), round(v)
    for du in (0, -1, 1):
        for dv in (0, -1, 1):
            candidate = EisInt(base_u + du, base_v + dv)
            if candidate * candidate == x:
                return _canonical_root(candidate)
    return None


def _factored_sqrt(x: EisInt) -> EisInt | None:
    from .primes import factor

    factorization = factor(x)
    root = None
    for unit in UNITS:
        if unit * unit == factorization.unit:
            root = unit
            break
    if root is None:
        return None
    for prime, exponent in factorization.factors:
        if exponent % 2:
            return None
        root = root * prime.value ** (exponent // 2)
    return _canonical_root(root)


def _canonical_root(root: EisInt) -> EisInt:
    other = -root
    return root if (root.a, root.b) >= (other.a, other.b) else other


def parse_eis(text: str) -> EisInt:
    cleaned = text.strip().lower().replace("ω", "w").replace(" ", "")
    if not cleaned:
        raise EisensteinParseError("Empty Eisenstein integer literal.")
    if "," in cleaned:
        parts = cleaned.split(",")
        if len(parts) != 2:
            raise EisensteinParseError("Expected 'a,b'.", context=text)
        try:
            return EisInt(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise EisensteinParseError("Coordinates must be integers.", context=text) from exc

    a = b = 0
    position = 0
    while position < len(cleaned):
        match = _TERM.match(cleaned, position)
        sign, digits, w_marker = match.groups() if match else ("", "", "")
        if match is None or match.end() == position or (not digits and not w_marker):
            raise EisensteinParseError("Unrecognized Eisenstein integer literal.", context=text)
        coefficient = int(digits) if digits else 1
        if sign == "-":
            coefficient = -coefficient
        if w_marker:
            b += coefficient
        else:
            a += coefficient
        position = match.end()
    return EisInt(a, b)

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

from .arithmetic import (
    divides,
    euclid_gcd,
    exact_div,
    inverse_mod,
    normalize,
    strip_prime,
    valuation,
)
from .errors import CrtConflictError, EisensteinDomainError
from .field import FieldElem
from .models import OMEGA, OMEGA2, ONE, ZERO, EisInt, PrimeElem, ResidueClass
from .primes import factor


class ResidueField:
    """Arithmetic in O/p; elements are ints in range(size)."""

    def __init__(self, prime: PrimeElem) -> None:
        self.prime = prime
        self.size = prime.norm
        self.characteristic = prime.characteristic
        self.degree = 2 if prime.kind == "inert" else 1
        self._omega = 0
        if self.degree == 1:
            p = self.characteristic
            c, d = prime.value.a, prime.value.b
            self._omega = (-c * pow(d, -1, p)) % p
        self._square_roots: dict[int, list[int]] | None = None

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.size)

    def from_eis(self, x: EisInt | int) -> int:
        x = EisInt.coerce(x)
        p = self.characteristic
        if self.degree == 1:
            return (x.a + x.b * self._omega) % p
        return (x.a % p) + p * (x.b % p)

    def from_field(self, x: FieldElem) -> int:
        den = self.from_eis(x.den)
        if den == 0:
            raise EisensteinDomainError("Denominator vanishes modulo the prime.", context=str(self.prime))
        return self.mul(self.from_eis(x.num), self.inv(den))

    def to_eis(self, element: int) -> EisInt:
        if self.degree == 1:
            return EisInt(element, 0)
        p = self.characteristic
        return EisInt(element % p, element // p)

    def add(self, e: int, f: int) -> int:
        p = self.characteristic
        if self.degree == 1:
            return (e + f) % p
        return ((e % p + f % p) % p) + p * ((e // p + f // p) % p)

    def neg(self, e: int) -> int:
        p = self.characteristic
        if self.degree == 1:
            return (-e) % p
        return ((-(e % p)) % p) + p * ((-(e // p)) % p)

    def sub(self, e: int, f: int) -> int:
        return self.add(e, self.neg(f))

    def mul(self, e: int, f: int) -> int:
        p = self.characteristic
        if self.degree == 1:
            return (e * f) % p
        c0, c1 = e % p, e // p
        d0, d1 = f % p, f // p
        cross = c1 * d1
        return ((c0 * d0 - cross) % p) + p * ((c0 * d1 + c1 * d0 - cross) % p)

    def pow(self, e: int, exponent: int) -> int:
        if self.degree == 1:
            return pow(e, exponent, self.characteristic)
        result = 1
        base = e
        while exponent:
            if exponent & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            exponent >>= 1
        return result

    def inv(self, e: int) -> int:
        if e == 0:
            raise EisensteinDomainError("Zero has no inverse in the residue field.", context=str(self.prime))
        return self.pow(e, self.size - 2)

    def quadratic_character(self, e: int) -> int:
        if self.characteristic == 2:
            raise EisensteinDomainError("Quadratic character is undefined in characteristic 2.")
        if e == 0:
            return 0
        return 1 if self.pow(e, (self.size - 1) // 2) == 1 else -1

    def square_roots(self, e: int) -> list[int]:
        if self._square_roots is None:
            table: dict[int, list[int]] = {}
            for y in self.elements():
                table.setdefault(self.mul(y, y), []).append(y)
            self._square_roots = table
        return list(self._square_roots.get(e, []))

    def element(self, value: "EisInt | int") -> "ResidueElem":
        return ResidueElem(self, self.from_eis(value))


@dataclass(frozen=True)
class ResidueElem:
    field: ResidueField
    value: int

    def _lift(self, other: object) -> int | None:
        if isinstance(other, ResidueElem):
            if other.field is not self.field:
                raise EisensteinDomainError("Residue elements from different fields.")
            return other.value
        if isinstance(other, EisInt) or (isinstance(other, int) and not isinstance(other, bool)):
            return self.field.from_eis(other)
        return None

    def is_zero(self) -> bool:
        return self.value == 0

    def __neg__(self) -> "ResidueElem":
        return ResidueElem(self.field, self.field.neg(self.value))

    def __add__(self, other: object) -> "ResidueElem":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return ResidueElem(self.field, self.field.add(self.value, rhs))

    __radd__ = __add__

    def __sub__(self, other: object) -> "ResidueElem":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return ResidueElem(self.field, self.field.sub(self.value, rhs))

    def __rsub__(self, other: object) -> "ResidueElem":
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return ResidueElem(self.field, self.field.sub(lhs, self.value))

    def __mul__(self, other: object) -> "ResidueElem":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return ResidueElem(self.field, self.field.mul(self.value, rhs))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "ResidueElem":
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return ResidueElem(self.field, self.field.mul(self.value, self.field.inv(rhs)))

    def __rtruediv__(self, other: object) -> "ResidueElem":
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return ResidueElem(self.field, self.field.mul(lhs, self.field.inv(self.value)))

    def __pow__(self, exponent: int) -> "ResidueElem":
        if exponent < 0:
            return ResidueElem(self.field, self.field.pow(self.field.inv(self.value), -exponent))
        return ResidueElem(self.field, self.field.pow(self.value, exponent))


@lru_cache(maxsize=512)
def residue_field(prime: PrimeElem) -> ResidueField:
    return ResidueField(prime)


def residue_class(x: EisInt | int, modulus: EisInt | int) -> ResidueClass:
    modulus = normalize(modulus)
    if modulus.is_zero():
        raise EisensteinDomainError("Residue classes need a nonzero modulus.")
    return ResidueClass(modulus=modulus, representative=EisInt.coerce(x) % modulus)


@lru_cache(maxsize=256)
def residue_system(modulus: EisInt) -> tuple[EisInt, ...]:
    modulus = normalize(modulus)
    if modulus.is_zero():
        raise EisensteinDomainError("Residue systems need a nonzero modulus.")
    content = gcd(modulus.a, modulus.b)
    rational_span = modulus.norm // content
    reps = {EisInt(a, b) % modulus for a in range(rational_span) for b in range(content)}
    return tuple(sorted(reps, key=lambda x: x.sort_key))


@lru_cache(maxsize=256)
def unit_residues(modulus: EisInt) -> tuple[EisInt, ...]:
    modulus = normalize(modulus)
    if modulus.is_unit():
        return (ZERO,)
    support = [prime.value for prime in factor(modulus).support]
    return tuple(
        x for x in residue_system(modulus) if not any(divides(prime, x) for prime in support)
    )


@lru_cache(maxsize=256)
def _unit_powers(modulus: EisInt, exponent: int) -> frozenset[EisInt]:
    return frozenset((u**exponent) % modulus for u in unit_residues(modulus))


def is_power_mod(x: EisInt | int, modulus: EisInt | int, exponent: int) -> bool:
    """True iff x = y**exponent mod modulus for some unit y."""
    modulus = normalize(modulus)
    return (EisInt.coerce(x) % modulus) in _unit_powers(modulus, exponent)


def _roots_of_unity(exponent: int) -> tuple[EisInt, ...]:
    if exponent == 2:
        return (ONE, -ONE)
    return (ONE, OMEGA, OMEGA2)


def residue_symbol(x: EisInt | int, prime: PrimeElem, exponent: int) -> EisInt:
    if exponent not in (2, 3):
        raise EisensteinDomainError("Residue symbols are supported for exponents 2 and 3.", context=exponent)
    if exponent == 2 and prime.norm % 2 == 0:
        raise EisensteinDomainError("Quadratic symbol at 2 is undefined; use is_local_power.", context=str(prime))
    if exponent == 3 and prime.kind == "ramified":
        raise EisensteinDomainError("Cubic symbol at 1-w is undefined; use is_local_power.", context=str(prime))
    field = residue_field(prime)
    value = field.from_eis(x)
    if value == 0:
        return ZERO
    power = field.pow(value, (prime.norm - 1) // exponent)
    for root in _roots_of_unity(exponent):
        if field.from_eis(root) == power:
            return root
    raise EisensteinDomainError("Power residue is not a root of unity.", context=f"{x} mod {prime}")


def is_local_power(x: FieldElem | EisInt | int, prime: PrimeElem, exponent: int) -> bool:
    if exponent not in (2, 3):
        raise EisensteinDomainError("Local power tests are supported for exponents 2 and 3.", context=exponent)
    x = FieldElem.coerce(x)
    if x.is_zero():
        raise EisensteinDomainError("Zero is not in the multiplicative group.")
    v = valuation(x.num, prime.value) - valuation(x.den, prime.value)
    if v % exponent:
        return False
    num = strip_prime(x.num, prime.value)
    den = strip_prime(x.den, prime.value)
    unit = num * den ** (exponent - 1)
    if divides(prime.value, exponent):
        # Hensel: a root mod p^(2 v_p(e) + 1) lifts
        depth = 2 * valuation(EisInt(exponent, 0), prime.value) + 1
        return is_power_mod(unit, prime.value**depth, exponent)
    return residue_symbol(unit, prime, exponent) == ONE


def crt_solve(constraints: Sequence[ResidueClass]) -> ResidueClass:
    if not constraints:
        return residue_class(ZERO, ONE)
    current = residue_class(constraints[0].representative, constraints[0].modulus)
    for constraint in constraints[1:]:
        current = _merge(current, constraint)
    return current


def _merge(left: ResidueClass, right: ResidueClass) -> ResidueClass:
    m1, x1 = left.modulus, left.representative
    m2, x2 = normalize(right.modulus), right.representative
    g = euclid_gcd(m1, m2)
    difference = x2 - x1
    if not divides(g, difference):
        raise CrtConflictError(
            "Inconsistent congruences.",
            context=f"{x1} mod {m1} vs {x2} mod {m2}",
        )
    reduced_modulus = exact_div(m2, g)
    step = (exact_div(difference, g) * inverse_mod(exact_div(m1, g), reduced_modulus)) % reduced_modulus
    return residue_class(x1 + m1 * step, m1 * reduced_modulus)

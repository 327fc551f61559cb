from __future__ import annotations

import json
from dataclasses import dataclass
from math import isqrt
from pathlib import Path
from typing import Any

from .errors import EisensteinConfigError, EisensteinDomainError, EisensteinParseError


def _round_div(numerator: int, denominator: int) -> int:
    return (2 * numerator + denominator) // (2 * denominator)


@dataclass(frozen=True)
class EisInt:
    """a + b*w with w^2 + w + 1 = 0."""

    a: int
    b: int

    @classmethod
    def coerce(cls, value: "EisInt | int") -> "EisInt":
        if isinstance(value, EisInt):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value, 0)
        raise TypeError(f"Cannot interpret {value!r} as an Eisenstein integer.")

    @property
    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.norm, self.a, self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm == 1

    def conjugate(self) -> "EisInt":
        return EisInt(self.a - self.b, -self.b)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "EisInt":
        return EisInt(-self.a, -self.b)

    def __add__(self, other: object) -> "EisInt":
        rhs = _maybe_coerce(other)
        if rhs is None:
            return NotImplemented
        return EisInt(self.a + rhs.a, self.b + rhs.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "EisInt":
        rhs = _maybe_coerce(other)
        if rhs is None:
            return NotImplemented
        return EisInt(self.a - rhs.a, self.b - rhs.b)

    def __rsub__(self, other: object) -> "EisInt":
        lhs = _maybe_coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "EisInt":
        rhs = _maybe_coerce(other)
        if rhs is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, rhs.a, rhs.b
        bd = b * d
        return EisInt(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "EisInt":
        if not isinstance(exponent, int) or exponent < 0:
            raise EisensteinDomainError("Exponent must be a non-negative integer.", context=exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: object) -> tuple["EisInt", "EisInt"]:
        divisor = _maybe_coerce(other)
        if divisor is None:
            return NotImplemented
        if divisor.is_zero():
            raise EisensteinDomainError("Division by zero.", context=str(self))
        n = divisor.norm
        scaled = self * divisor.conjugate()
        quotient = EisInt(_round_div(scaled.a, n), _round_div(scaled.b, n))
        return quotient, self - quotient * divisor

    def __floordiv__(self, other: object) -> "EisInt":
        result = self.__divmod__(other)
        if result is NotImplemented:
            return NotImplemented
        return result[0]

    def __mod__(self, other: object) -> "EisInt":
        result = self.__divmod__(other)
        if result is NotImplemented:
            return NotImplemented
        return result[1]

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.b == 1:
            w_part = "w"
        elif self.b == -1:
            w_part = "-w"
        else:
            w_part = f"{self.b}w"
        if self.a == 0:
            return w_part
        sign = "" if w_part.startswith("-") else "+"
        return f"{self.a}{sign}{w_part}"

    def to_json(self) -> dict[str, str]:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, data: Any) -> "EisInt":
        if not isinstance(data, dict) or set(data) != {"a", "b"}:
            raise EisensteinParseError("EisInt must be an object with keys a and b.", context=data)
        try:
            return cls(_decimal(data["a"]), _decimal(data["b"]))
        except ValueError as exc:
            raise EisensteinParseError("EisInt coordinates must be decimal strings.", context=data) from exc


def _decimal(value: Any) -> int:
    if not isinstance(value, str):
        raise ValueError(value)
    return int(value, 10)


def _maybe_coerce(value: object) -> EisInt | None:
    if isinstance(value, EisInt):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return EisInt(value, 0)
    return None


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
OMEGA = EisInt(0, 1)
OMEGA2 = EisInt(-1, -1)
LAMBDA = EisInt(1, -1)
UNITS = (ONE, -ONE, OMEGA, -OMEGA, OMEGA2, -OMEGA2)

PRIME_KINDS = ("split", "inert", "ramified")


@dataclass(frozen=True)
class PrimeElem:
    value: EisInt
    norm: int
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in PRIME_KINDS:
            raise EisensteinDomainError("Unknown prime kind.", context=self.kind)

    @property
    def characteristic(self) -> int:
        if self.kind == "inert":
            return isqrt(self.norm)
        return self.norm

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return self.value.sort_key

    def __str__(self) -> str:
        return str(self.value)

    def to_json(self) -> dict[str, str]:
        return self.value.to_json()


@dataclass(frozen=True)
class ResidueClass:
    modulus: EisInt
    representative: EisInt

    def to_json(self) -> dict[str, dict[str, str]]:
        return {"modulus": self.modulus.to_json(), "representative": self.representative.to_json()}


@dataclass(frozen=True)
class Factorization:
    unit: EisInt
    factors: tuple[tuple[PrimeElem, int], ...]

    @property
    def support(self) -> tuple[PrimeElem, ...]:
        return tuple(prime for prime, _ in self.factors)

    def multiplicity(self, prime: PrimeElem) -> int:
        for candidate, exponent in self.factors:
            if candidate.value == prime.value:
                return exponent
        return 0

    def expand(self) -> EisInt:
        result = self.unit
        for prime, exponent in self.factors:
            result = result * prime.value**exponent
        return result


@dataclass(frozen=True)
class EisensteinConfig:
    factor_norm_limit: int = 10**40

    @classmethod
    def from_runtime_file(cls, path: str | Path = "config/runtime.json") -> "EisensteinConfig":
        runtime_path = Path(path)
        if not runtime_path.exists():
            return cls()
        data = json.loads(runtime_path.read_text(encoding="utf-8"))
        section = data.get("eisenstein", {})
        config = cls(factor_norm_limit=int(section.get("factor_norm_limit", 10**40)))
        config.validate()
        return config

    def validate(self) -> None:
        if self.factor_norm_limit <= 1:
            raise EisensteinConfigError("factor_norm_limit must be greater than 1.", context=self.factor_norm_limit)

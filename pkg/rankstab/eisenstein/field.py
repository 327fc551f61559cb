from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .arithmetic import euclid_gcd, exact_div, normalize
from .errors import EisensteinDomainError, EisensteinParseError
from .models import ONE, ZERO, EisInt


@dataclass(frozen=True)
class FieldElem:
    """Element num/den of Q(w); build through FieldElem.of to get the canonical form."""

    num: EisInt
    den: EisInt

    @classmethod
    def of(cls, num: EisInt | int, den: EisInt | int = 1) -> "FieldElem":
        num = EisInt.coerce(num)
        den = EisInt.coerce(den)
        if den.is_zero():
            raise EisensteinDomainError("Zero denominator.", context=str(num))
        if num.is_zero():
            return cls(ZERO, ONE)
        g = euclid_gcd(num, den)
        num = exact_div(num, g)
        den = exact_div(den, g)
        normalized_den = normalize(den)
        unit = exact_div(normalized_den, den)
        return cls(num * unit, normalized_den)

    @classmethod
    def coerce(cls, value: "FieldElem | EisInt | int") -> "FieldElem":
        if isinstance(value, FieldElem):
            return value
        return cls.of(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        return self.den == ONE

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise EisensteinDomainError("Zero has no inverse.")
        return FieldElem.of(self.den, self.num)

    def __neg__(self) -> "FieldElem":
        return FieldElem(-self.num, self.den)

    def __add__(self, other: object) -> "FieldElem":
        rhs = _maybe_field(other)
        if rhs is None:
            return NotImplemented
        return FieldElem.of(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElem":
        rhs = _maybe_field(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "FieldElem":
        lhs = _maybe_field(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "FieldElem":
        rhs = _maybe_field(other)
        if rhs is None:
            return NotImplemented
        return FieldElem.of(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "FieldElem":
        rhs = _maybe_field(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero():
            raise EisensteinDomainError("Division by zero.", context=str(self))
        return FieldElem.of(self.num * rhs.den, self.den * rhs.num)

    def __rtruediv__(self, other: object) -> "FieldElem":
        lhs = _maybe_field(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> "FieldElem":
        if not isinstance(exponent, int):
            raise EisensteinDomainError("Exponent must be an integer.", context=exponent)
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElem.of(self.num**exponent, self.den**exponent)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self) -> dict[str, dict[str, str]]:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: Any) -> "FieldElem":
        if not isinstance(data, dict) or set(data) != {"num", "den"}:
            raise EisensteinParseError("FieldElem must be an object with keys num and den.", context=data)
        parsed = cls.of(EisInt.from_json(data["num"]), EisInt.from_json(data["den"]))
        if parsed.num != EisInt.from_json(data["num"]) or parsed.den != EisInt.from_json(data["den"]):
            raise EisensteinParseError("FieldElem is not in canonical form.", context=data)
        return parsed


def _maybe_field(value: object) -> FieldElem | None:
    if isinstance(value, FieldElem):
        return value
    if isinstance(value, EisInt) or (isinstance(value, int) and not isinstance(value, bool)):
        return FieldElem.of(value)
    return None

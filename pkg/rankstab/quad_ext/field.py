from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import QuadExtPreconditionError


@dataclass(frozen=True)
class QuadElem:
    """c0 + c1*sqrt(q) over any base field whose elements support + - * / and is_zero()."""

    c0: Any
    c1: Any
    q: Any

    @classmethod
    def of(cls, value: Any, q: Any) -> "QuadElem":
        zero = q - q
        return cls(zero + value, zero, q)

    @classmethod
    def sqrt_q(cls, q: Any) -> "QuadElem":
        zero = q - q
        return cls(zero, zero + 1, q)

    def _lift(self, other: object) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.q != self.q:
                raise QuadExtPreconditionError("Elements of different quadratic extensions.")
            return other
        return QuadElem.of(other, self.q)

    def is_zero(self) -> bool:
        return self.c0.is_zero() and self.c1.is_zero()

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.c0, -self.c1, self.q)

    def norm(self) -> Any:
        return self.c0 * self.c0 - self.q * self.c1 * self.c1

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.c0, -self.c1, self.q)

    def __add__(self, other: object) -> "QuadElem":
        rhs = self._lift(other)
        return QuadElem(self.c0 + rhs.c0, self.c1 + rhs.c1, self.q)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadElem":
        return self + (-self._lift(other))

    def __rsub__(self, other: object) -> "QuadElem":
        return self._lift(other) - self

    def __mul__(self, other: object) -> "QuadElem":
        rhs = self._lift(other)
        return QuadElem(
            self.c0 * rhs.c0 + self.q * self.c1 * rhs.c1,
            self.c0 * rhs.c1 + self.c1 * rhs.c0,
            self.q,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        norm = self.norm()
        if norm.is_zero():
            raise QuadExtPreconditionError("Element is not invertible in K.", context=str(self))
        return QuadElem(self.c0 / norm, -self.c1 / norm, self.q)

    def __truediv__(self, other: object) -> "QuadElem":
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other: object) -> "QuadElem":
        return self._lift(other) * self.inverse()

    def __pow__(self, exponent: int) -> "QuadElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadElem.of(1, self.q)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return f"({self.c0}) + ({self.c1})*sqrt({self.q})"

    def to_json(self) -> dict[str, Any]:
        return {"c0": self.c0.to_json(), "c1": self.c1.to_json()}

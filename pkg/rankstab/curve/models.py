from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from rankstab.eisenstein import EisInt, FieldElem, PrimeElem
from rankstab.quad_ext import QuadElem

from .errors import CurveConfigError, CurveDomainError


@dataclass(frozen=True)
class CurveModel:
    """y^2 = x^3 + n with n integral and sixth-power free; n = n0 * scaling^6."""

    n: EisInt
    scaling: FieldElem

    @property
    def n_field(self) -> FieldElem:
        return FieldElem.of(self.n)

    @property
    def original_n(self) -> FieldElem:
        return self.n_field / self.scaling**6

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n.to_json(), "scaling": self.scaling.to_json()}


@dataclass(frozen=True)
class CurvePoint:
    """Affine (x, y) or the point at infinity (both None); coordinates from any field."""

    x: Optional[Any] = None
    y: Optional[Any] = None

    @classmethod
    def infinity(cls) -> "CurvePoint":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __neg__(self) -> "CurvePoint":
        if self.is_infinity:
            return self
        return CurvePoint(self.x, -self.y)

    def __str__(self) -> str:
        if self.is_infinity:
            return "infinity"
        return f"({self.x}, {self.y})"

    def to_json(self) -> dict[str, Any]:
        if self.is_infinity:
            return {"infinity": True}
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, data: Any) -> "CurvePoint":
        if isinstance(data, dict) and data.get("infinity") is True:
            return cls.infinity()
        if not isinstance(data, dict) or set(data) != {"x", "y"}:
            raise CurveDomainError("Point must be {infinity: true} or an object with keys x and y.", context=data)
        return cls(FieldElem.from_json(data["x"]), FieldElem.from_json(data["y"]))


@dataclass(frozen=True)
class KPoint:
    """Point with coordinates in K = F(sqrt q)."""

    x: Optional[QuadElem] = None
    y: Optional[QuadElem] = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def conjugate(self) -> "KPoint":
        if self.is_infinity:
            return self
        return KPoint(self.x.conjugate(), self.y.conjugate())

    def __neg__(self) -> "KPoint":
        if self.is_infinity:
            return self
        return KPoint(self.x, -self.y)

    def satisfies(self, n: Any) -> bool:
        if self.is_infinity:
            return True
        return (self.y * self.y - self.x * self.x * self.x - n).is_zero()

    def to_json(self) -> dict[str, Any]:
        if self.is_infinity:
            return {"infinity": True}
        return {"x": self.x.to_json(), "y": self.y.to_json()}


@dataclass(frozen=True)
class TorsionBound:
    bound: int
    witnesses: tuple[tuple[PrimeElem, int], ...]

    @property
    def characteristics(self) -> set[int]:
        return {prime.characteristic for prime, _ in self.witnesses}

    def to_json(self) -> dict[str, Any]:
        return {
            "bound": str(self.bound),
            "witnesses": [{"prime": prime.to_json(), "order": str(order)} for prime, order in self.witnesses],
        }


@dataclass(frozen=True)
class CurveConfig:
    torsion_witness_count: int = 4
    torsion_prime_max_norm: int = 5000
    torsion_search_norm: int = 10000
    max_point_order: int = 12

    @classmethod
    def from_runtime_file(cls, path: str | Path = "config/runtime.json") -> "CurveConfig":
        runtime_path = Path(path)
        if not runtime_path.exists():
            return cls()
        data = json.loads(runtime_path.read_text(encoding="utf-8"))
        section = data.get("curve", {})
        cfg = cls(
            torsion_witness_count=int(section.get("torsion_witness_count", 4)),
            torsion_prime_max_norm=int(section.get("torsion_prime_max_norm", 5000)),
            torsion_search_norm=int(section.get("torsion_search_norm", 10000)),
            max_point_order=int(section.get("max_point_order", 12)),
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.torsion_witness_count < 2:
            raise CurveConfigError("torsion_witness_count must be at least 2.", context=self.torsion_witness_count)
        if self.torsion_prime_max_norm < 13:
            raise CurveConfigError("torsion_prime_max_norm is too small.", context=self.torsion_prime_max_norm)
        if self.torsion_search_norm < 1:
            raise CurveConfigError("torsion_search_norm must be positive.", context=self.torsion_search_norm)
        if self.max_point_order < 1:
            raise CurveConfigError("max_point_order must be positive.", context=self.max_point_order)

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

from rankstab.eisenstein import EisInt, FieldElem, PrimeElem, ResidueClass

from .errors import QuadExtConfigError


@dataclass(frozen=True)
class QuadExt:
    q: EisInt
    ramified: tuple[PrimeElem, ...]
    lambda_unramified: bool = True

    def is_ramified(self, prime: PrimeElem) -> bool:
        return any(candidate.value == prime.value for candidate in self.ramified)

    def to_json(self) -> dict[str, Any]:
        return {
            "q": self.q.to_json(),
            "ramified": [prime.to_json() for prime in self.ramified],
        }


@dataclass(frozen=True)
class SigmaSets:
    ext: QuadExt
    r: EisInt
    S: tuple[PrimeElem, ...]
    S_prime_superset: tuple[PrimeElem, ...]

    def contains(self, prime: PrimeElem) -> bool:
        return any(member.value == prime.value for member in self.S)

    def is_inert(self, prime: PrimeElem) -> bool:
        from .extension import splitting_type

        return splitting_type(self.ext, prime) == "inert"

    def is_sigma_unit(self, x: FieldElem | EisInt | int, hints: Iterable[PrimeElem] = ()) -> bool:
        from .extension import sigma_unit_offenders

        return not sigma_unit_offenders(self, x, hints)

    def to_json(self) -> dict[str, Any]:
        return {
            "S": [prime.to_json() for prime in self.S],
            "S_prime_superset": [prime.to_json() for prime in self.S_prime_superset],
        }


@dataclass(frozen=True)
class TargetSystem:
    modulus: EisInt
    targets: tuple[ResidueClass, ...]

    def to_json(self) -> dict[str, Any]:
        return {
            "modulus": self.modulus.to_json(),
            "targets": [target.representative.to_json() for target in self.targets],
        }


@dataclass(frozen=True)
class ConicSolution:
    """t1*x^2 + beta*t2*y^2 = t3*z^2 (mod modulus) with unit x, y, z; u_i are the resulting residues."""

    modulus: EisInt
    beta: EisInt
    t1: ResidueClass
    t2: ResidueClass
    t3: ResidueClass
    x: EisInt
    y: EisInt
    z: EisInt
    u1: ResidueClass
    u2: ResidueClass
    u3: ResidueClass

    def to_json(self) -> dict[str, Any]:
        return {
            "modulus": self.modulus.to_json(),
            "t": [self.t1.representative.to_json(), self.t2.representative.to_json(), self.t3.representative.to_json()],
            "witness": [self.x.to_json(), self.y.to_json(), self.z.to_json()],
        }


@dataclass(frozen=True)
class QuadExtConfig:
    witness_count: int = 3
    two_adic_depth: int = 3
    max_targets: int = 12
    witness_search_limit: int = 4000

    @classmethod
    def from_runtime_file(cls, path: str | Path = "config/runtime.json") -> "QuadExtConfig":
        runtime_path = Path(path)
        if not runtime_path.exists():
            return cls()
        data = json.loads(runtime_path.read_text(encoding="utf-8"))
        section = data.get("quad_ext", {})
        cfg = cls(
            witness_count=int(section.get("witness_count", 3)),
            two_adic_depth=int(section.get("two_adic_depth", 3)),
            max_targets=int(section.get("max_targets", 12)),
            witness_search_limit=int(section.get("witness_search_limit", 4000)),
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.witness_count < 1:
            raise QuadExtConfigError("witness_count must be at least 1.", context=self.witness_count)
        if self.two_adic_depth < 3:
            raise QuadExtConfigError("two_adic_depth below 3 cannot decide 2-adic squares.", context=self.two_adic_depth)
        if self.max_targets < 1:
            raise QuadExtConfigError("max_targets must be at least 1.", context=self.max_targets)
        if self.witness_search_limit < self.witness_count:
            raise QuadExtConfigError(
                "witness_search_limit must be at least witness_count.",
                context=self.witness_search_limit,
            )

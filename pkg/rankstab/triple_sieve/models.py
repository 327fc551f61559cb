from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from rankstab.eisenstein import EisInt, FieldElem, PrimeElem, ResidueClass, prime_elem
from rankstab.quad_ext import ConicSolution, SigmaSets

from .errors import SieveConfigError


@dataclass(frozen=True)
class CongruenceSystem:
    """Targets u1 + beta*u2 = u3 (mod modulus) for prime triples; depth_n = 0 means no S-adic constraints."""

    modulus: EisInt
    u1: ResidueClass
    u2: ResidueClass
    u3: ResidueClass
    beta: EisInt
    r: EisInt
    gamma: EisInt
    depth_n: int
    depth_map: tuple[tuple[PrimeElem, int], ...]
    support: tuple[PrimeElem, ...] = ()
    sigma: Optional[SigmaSets] = None
    conic: Optional[ConicSolution] = None

    @property
    def targets(self) -> tuple[ResidueClass, ResidueClass, ResidueClass]:
        return (self.u1, self.u2, self.u3)

    @property
    def gamma_power(self) -> EisInt:
        return self.gamma ** (3 * self.depth_n)

    def meets_targets(self, p1: EisInt, p2: EisInt, p3: EisInt) -> bool:
        return all(
            ((value - target.representative) % self.modulus).is_zero()
            for value, target in zip((p1, p2, p3), self.targets)
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "modulus": self.modulus.to_json(),
            "targets": [target.representative.to_json() for target in self.targets],
            "beta": self.beta.to_json(),
            "r": self.r.to_json(),
            "gamma": self.gamma.to_json(),
            "depth_n": str(self.depth_n),
            "depth_map": [{"prime": prime.to_json(), "exponent": str(exponent)} for prime, exponent in self.depth_map],
            "conic": self.conic.to_json() if self.conic is not None else None,
        }


@dataclass(frozen=True)
class PrimeTriple:
    p1: EisInt
    p2: EisInt
    p3: EisInt
    beta: EisInt

    @property
    def primes(self) -> tuple[PrimeElem, PrimeElem, PrimeElem]:
        return (prime_elem(self.p1), prime_elem(self.p2), prime_elem(self.p3))

    @property
    def sort_key(self) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
        return (self.p2.sort_key, self.p1.sort_key)

    def identity_holds(self) -> bool:
        return self.p1 + self.beta * self.p2 == self.p3

    def to_json(self) -> dict[str, Any]:
        return {
            "p1": self.p1.to_json(),
            "p2": self.p2.to_json(),
            "p3": self.p3.to_json(),
            "beta": self.beta.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "PrimeTriple":
        return cls(
            p1=EisInt.from_json(data["p1"]),
            p2=EisInt.from_json(data["p2"]),
            p3=EisInt.from_json(data["p3"]),
            beta=EisInt.from_json(data["beta"]),
        )


@dataclass(frozen=True)
class TwistParams:
    a: FieldElem
    b: FieldElem
    t: FieldElem
    r: EisInt
    source: PrimeTriple

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "t": self.t.to_json(),
            "r": self.r.to_json(),
            "triple": self.source.to_json(),
        }


@dataclass(frozen=True)
class SieveConfig:
    norm_bound: Optional[int] = None
    max_results: int = 5
    threads: int = 1
    seed: int = 0
    max_congruence_attempts: int = 64

    @classmethod
    def from_runtime_file(cls, path: str | Path = "config/runtime.json") -> "SieveConfig":
        runtime_path = Path(path)
        if not runtime_path.exists():
            return cls()
        data = json.loads(runtime_path.read_text(encoding="utf-8"))
        section = data.get("triple_sieve", {})
        raw_bound = section.get("norm_bound")
        cfg = cls(
            norm_bound=None if raw_bound is None else int(raw_bound),
            max_results=int(section.get("max_results", 5)),
            threads=int(section.get("threads", 1)),
            seed=int(section.get("seed", 0)),
            max_congruence_attempts=int(section.get("max_congruence_attempts", 64)),
        )
        cfg.validate()
        return cfg

    def with_env_overrides(self) -> "SieveConfig":
        raw_threads = os.getenv("RANKSTAB_THREADS")
        if raw_threads is None:
            return self
        try:
            threads = int(raw_threads)
        except ValueError as exc:
            raise SieveConfigError("RANKSTAB_THREADS must be an integer.", context=raw_threads) from exc
        cfg = SieveConfig(
            norm_bound=self.norm_bound,
            max_results=self.max_results,
            threads=threads,
            seed=self.seed,
            max_congruence_attempts=self.max_congruence_attempts,
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.norm_bound is not None and self.norm_bound < 1:
            raise SieveConfigError("norm_bound must be positive.", context=self.norm_bound)
        if self.max_results < 1:
            raise SieveConfigError("max_results must be at least 1.", context=self.max_results)
        if self.threads < 1:
            raise SieveConfigError("threads must be at least 1.", context=self.threads)
        if self.seed < 0:
            raise SieveConfigError("seed must be non-negative.", context=self.seed)
        if self.max_congruence_attempts < 1:
            raise SieveConfigError("max_congruence_attempts must be at least 1.", context=self.max_congruence_attempts)

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from rankstab.eisenstein import EisInt, FieldElem, PrimeElem

from .errors import SelmerConfigError, SelmerPreconditionError

REPORT_CASES = ("in_S_isomorphic", "silent", "good_unramified")


@dataclass(frozen=True)
class LocalConditionReport:
    prime: PrimeElem
    case: str
    checks: tuple[tuple[str, bool], ...]
    n_base: FieldElem
    n_twisted: FieldElem

    def __post_init__(self) -> None:
        if self.case not in REPORT_CASES:
            raise SelmerPreconditionError("Unknown local condition case.", context=self.case)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_json(self) -> dict[str, Any]:
        return {
            "prime": self.prime.to_json(),
            "case": self.case,
            "checks": [{"name": name, "ok": ok} for name, ok in self.checks],
        }


@dataclass(frozen=True)
class BlanketCoverage:
    statement: str
    covered_support: tuple[PrimeElem, ...]
    checks: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    def to_json(self) -> dict[str, Any]:
        return {
            "statement": self.statement,
            "covered_support": [prime.to_json() for prime in self.covered_support],
            "checks": [{"name": name, "ok": ok} for name, ok in self.checks],
        }


@dataclass(frozen=True)
class PreservationCertificate:
    q: EisInt
    r: EisInt
    t: FieldElem
    n_base: FieldElem
    n_twisted: FieldElem
    reports: tuple[LocalConditionReport, ...]
    blanket: BlanketCoverage
    conclusion: str

    @property
    def failing_primes(self) -> list[PrimeElem]:
        return [report.prime for report in self.reports if not report.passed]

    @property
    def status(self) -> str:
        if self.failing_primes or not self.blanket.passed:
            return "failed"
        return "verified"

    def to_json(self) -> dict[str, Any]:
        return {
            "q": self.q.to_json(),
            "r": self.r.to_json(),
            "t": self.t.to_json(),
            "n_base": self.n_base.to_json(),
            "n_twisted": self.n_twisted.to_json(),
            "reports": [report.to_json() for report in self.reports],
            "blanket": self.blanket.to_json(),
            "conclusion": self.conclusion,
            "status": self.status,
        }


@dataclass(frozen=True)
class SelmerLocalConfig:
    bruteforce_max_norm: int = 500

    @classmethod
    def from_runtime_file(cls, path: str | Path = "config/runtime.json") -> "SelmerLocalConfig":
        runtime_path = Path(path)
        if not runtime_path.exists():
            return cls()
        data = json.loads(runtime_path.read_text(encoding="utf-8"))
        section = data.get("selmer_local", {})
        cfg = cls(bruteforce_max_norm=int(section.get("bruteforce_max_norm", 500)))
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.bruteforce_max_norm < 4:
            raise SelmerConfigError("bruteforce_max_norm must be at least 4.", context=self.bruteforce_max_norm)

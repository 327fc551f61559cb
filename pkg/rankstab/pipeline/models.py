from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from rankstab.eisenstein import EisInt, FieldElem

from .errors import OracleMismatchError, PipelineConfigError, PipelineError

STEP_STATUSES = ("verified", "asserted", "failed")
CONCLUSION_STATUSES = ("verified", "conditional", "failed")

STEP_ANCHORS = {
    "quadratic_extension": "K = F(sqrt q) with q square-free up to units and 1-w unramified",
    "sigma_sets": "S = primes over 3 and primes over 6qr split in K; Sigma = S plus primes inert in K",
    "congruence_system": "p2 = p3 = 1 to depth n at S, inert square classes for p1, p2, p3, beta = 2r gamma^(3n)",
    "prime_triple": "prime triple p1 + beta p2 = p3 meeting the congruence targets",
    "twist_parameters": "a = p1/p3, b = gamma^(3n) p2/p3, t = ab with a + 2rb = 1 and t a cube at S",
    "local_conditions": "local conditions of n = q^3 r^2 and of its twist by t^2 coincide at every prime",
    "rank_zero_input": "phi-Selmer group of n = q^3 r^2 vanishes (external input)",
    "positive_rank_witness": "(a, a(1 - rb)) has infinite order on y^2 = x^3 + r^2 a^2 b^2",
}
STEP_NAMES = tuple(STEP_ANCHORS)
ORACLE_STEP = "rank_zero_input"

RANK_ZERO_CLAIM = "Sel_phi(J_n) = 0"
ABSENT_PROVENANCE = "rank-0 input absent"
CONCLUSION_STATEMENT = "rank A(K) = rank A(F) > 0 for A = J_{r^2 a^2 b^2}"
POSITIVE_RANK_STATEMENT = "rank J_{r^2 a^2 b^2}(F) > 0"


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def body_digest(body: dict[str, Any]) -> str:
    return hashlib.sha256(canonical_json(body).encode("ascii")).hexdigest()


@dataclass(frozen=True)
class RankZeroAssertion:
    n: FieldElem
    provenance: str
    claim: str = RANK_ZERO_CLAIM

    def check_against(self, q: EisInt, r: EisInt) -> None:
        expected = FieldElem.of(q**3 * r * r)
        if self.n != expected:
            raise OracleMismatchError("Oracle n does not equal q^3 r^2.", context=f"{self.n} vs {expected}")

    def to_json(self) -> dict[str, Any]:
        return {"statement": self.claim, "n": self.n.to_json(), "provenance": self.provenance}


@dataclass(frozen=True)
class Step:
    name: str
    data: dict[str, Any]
    status: str
    diagnostics: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.status not in STEP_STATUSES:
            raise PipelineError("invalid_step_status", "Unknown step status.", self.status)

    @property
    def anchor(self) -> str:
        return STEP_ANCHORS[self.name]

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "data": self.data,
            "status": self.status,
            "diagnostics": list(self.diagnostics),
        }


@dataclass(frozen=True)
class Certificate:
    version: str
    inputs: dict[str, Any]
    oracle_assertions: tuple[RankZeroAssertion, ...]
    steps: tuple[Step, ...]
    conclusion: dict[str, Any]

    @property
    def status(self) -> str:
        return self.conclusion["status"]

    def step(self, name: str) -> Optional[Step]:
        for step in self.steps:
            if step.name == name:
                return step
        return None

    def body(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "inputs": self.inputs,
            "oracle_assertions": [assertion.to_json() for assertion in self.oracle_assertions],
            "steps": [step.to_json() for step in self.steps],
            "conclusion": self.conclusion,
        }

    def to_json(self) -> dict[str, Any]:
        body = self.body()
        return {**body, "digest": body_digest(body)}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


@dataclass(frozen=True)
class ConstructOptions:
    depth_n: int = 5
    norm_bound: Optional[int] = None
    seed: int = 0
    max_results: int = 5
    threads: int = 1


@dataclass(frozen=True)
class PipelineConfig:
    depth_n: int = 5
    write_run_log: bool = True
    run_log_dir: str = "logs"
    certificate_version: str = "1"

    @classmethod
    def from_runtime_file(cls, path: str | Path = "config/runtime.json") -> "PipelineConfig":
        runtime_path = Path(path)
        if not runtime_path.exists():
            return cls()
        data = json.loads(runtime_path.read_text(encoding="utf-8"))
        section = data.get("pipeline", {})
        cfg = cls(
            depth_n=int(section.get("depth_n", 5)),
            write_run_log=bool(section.get("write_run_log", True)),
            run_log_dir=str(section.get("run_log_dir", "logs")),
            certificate_version=str(section.get("certificate_version", "1")),
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.depth_n < 5:
            raise PipelineConfigError("depth_n must be at least 5.", context=self.depth_n)
        if not self.run_log_dir.strip():
            raise PipelineConfigError("run_log_dir must be non-empty.")
        if self.certificate_version != "1":
            raise PipelineConfigError("Only certificate version 1 is supported.", context=self.certificate_version)


@dataclass
class RunLog:
    run_id: str
    label: str
    start_ms: float
    lines: list[str] = field(default_factory=list)

    def add(self, line: str) -> None:
        timestamp = datetime.now(timezone.utc).isoformat()
        self.lines.append(f"{timestamp} {line}")

    def write(self, log_dir: str | Path = "logs") -> Path:
        logs_dir = Path(log_dir)
        logs_dir.mkdir(parents=True, exist_ok=True)
        ts = datetime.now(timezone.utc).strftime("%Y%m%d-%H%M%S")
        path = logs_dir / f"construct-{self.label}-{ts}-{self.run_id}.log"
        path.write_text("\n".join(self.lines) + "\n", encoding="utf-8")
        return path

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from rankstab.eisenstein import EisensteinParseError, FieldElem

from .errors import CertificateParseError
from .models import CONCLUSION_STATUSES, RANK_ZERO_CLAIM, STEP_STATUSES, RankZeroAssertion


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class EisIntDoc(_Strict):
    a: str = Field(pattern=r"^-?\d+$")
    b: str = Field(pattern=r"^-?\d+$")


class FieldElemDoc(_Strict):
    num: EisIntDoc
    den: EisIntDoc


class InputsDoc(_Strict):
    q: EisIntDoc
    r: EisIntDoc
    depth_n: str = Field(pattern=r"^\d+$")
    norm_bound: str = Field(pattern=r"^(\d+|auto)$")
    seed: str = Field(pattern=r"^\d+$")
    max_results: str = Field(pattern=r"^\d+$")


class OracleAssertionDoc(_Strict):
    statement: str
    n: FieldElemDoc
    provenance: str


class StepDoc(_Strict):
    name: str
    anchor: str
    data: dict[str, Any]
    status: str
    diagnostics: list[str]

    @field_validator("status")
    @classmethod
    def _known_status(cls, value: str) -> str:
        if value not in STEP_STATUSES:
            raise ValueError(f"unknown step status {value!r}")
        return value


class SubStatementDoc(_Strict):
    statement: str
    status: Literal["verified", "failed"]


class ConclusionDoc(_Strict):
    statement: str
    status: str
    sub_statements: list[SubStatementDoc]

    @field_validator("status")
    @classmethod
    def _known_status(cls, value: str) -> str:
        if value not in CONCLUSION_STATUSES:
            raise ValueError(f"unknown conclusion status {value!r}")
        return value


class CertificateDoc(_Strict):
    version: Literal["1"]
    inputs: InputsDoc
    oracle_assertions: list[OracleAssertionDoc]
    steps: list[StepDoc]
    conclusion: ConclusionDoc
    digest: str = Field(pattern=r"^[0-9a-f]{64}$")


class OracleFileDoc(_Strict):
    n: FieldElemDoc
    provenance: str = Field(min_length=1)
    claim: str = RANK_ZERO_CLAIM


def _read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CertificateParseError("File is not readable JSON.", context=f"{path}: {exc}") from exc


def parse_certificate(payload: Any) -> CertificateDoc:
    try:
        return CertificateDoc.model_validate(payload)
    except ValidationError as exc:
        raise CertificateParseError("Certificate violates the schema.", context=str(exc.errors()[:3])) from exc


def load_certificate(path: str | Path) -> CertificateDoc:
    return parse_certificate(_read_json(path))


def load_oracle(path: str | Path) -> RankZeroAssertion:
    payload = _read_json(path)
    try:
        doc = OracleFileDoc.model_validate(payload)
        n = FieldElem.from_json(doc.n.model_dump())
    except ValidationError as exc:
        raise CertificateParseError("Oracle file violates the schema.", context=str(exc.errors()[:3])) from exc
    except EisensteinParseError as exc:
        raise CertificateParseError("Oracle n is malformed.", context=str(exc)) from exc
    return RankZeroAssertion(n=n, provenance=doc.provenance, claim=doc.claim)

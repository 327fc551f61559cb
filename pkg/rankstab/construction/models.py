from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from rankstab.curve import CurveModel, CurvePoint, TorsionBound
from rankstab.eisenstein import EisInt, FieldElem

from .errors import ConstructionDomainError

WITNESS_STATUSES = ("verified", "torsion-witness")


@dataclass(frozen=True)
class WitnessCertificate:
    status: str
    torsion: TorsionBound

    def __post_init__(self) -> None:
        if self.status not in WITNESS_STATUSES:
            raise ConstructionDomainError("Unknown witness status.", context=self.status)

    @property
    def nontorsion(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict[str, Any]:
        return {"status": self.status, "torsion_bound": self.torsion.to_json()}


@dataclass(frozen=True)
class CoverDatum:
    """The cover a x^3 + 2rb y^3 = 1, its image point and the integral model it lands on."""

    a: FieldElem
    b: FieldElem
    r: EisInt
    n_raw: FieldElem
    raw_point: CurvePoint
    curve: CurveModel
    point: CurvePoint
    certificate: WitnessCertificate

    def to_json(self) -> dict[str, Any]:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "r": self.r.to_json(),
            "n_raw": self.n_raw.to_json(),
            "raw_point": self.raw_point.to_json(),
            "curve": self.curve.to_json(),
            "point": self.point.to_json(),
            "certificate": self.certificate.to_json(),
        }

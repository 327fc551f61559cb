from .cover import build_positive_rank_witness, cover_map
from .errors import ConstructionDomainError, ConstructionError
from .models import WITNESS_STATUSES, CoverDatum, WitnessCertificate

__all__ = [
    "CoverDatum",
    "WitnessCertificate",
    "WITNESS_STATUSES",
    "ConstructionError",
    "ConstructionDomainError",
    "cover_map",
    "build_positive_rank_witness",
]

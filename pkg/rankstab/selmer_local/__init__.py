from .errors import SelmerConfigError, SelmerLocalError, SelmerPreconditionError
from .models import (
    REPORT_CASES,
    BlanketCoverage,
    LocalConditionReport,
    PreservationCertificate,
    SelmerLocalConfig,
)
from .preservation import preservation_report
from .silence import is_silent, verify_silence_bruteforce

__all__ = [
    "LocalConditionReport",
    "BlanketCoverage",
    "PreservationCertificate",
    "SelmerLocalConfig",
    "REPORT_CASES",
    "SelmerLocalError",
    "SelmerPreconditionError",
    "SelmerConfigError",
    "is_silent",
    "verify_silence_bruteforce",
    "preservation_report",
]

from .construct import construct_instance
from .errors import CertificateParseError, OracleMismatchError, PipelineConfigError, PipelineError
from .models import (
    ABSENT_PROVENANCE,
    STEP_ANCHORS,
    STEP_NAMES,
    Certificate,
    ConstructOptions,
    PipelineConfig,
    RankZeroAssertion,
    RunLog,
    Step,
    body_digest,
    canonical_json,
)
from .schema import load_certificate, load_oracle, parse_certificate
from .status import EXIT_CODES, conclusion_status, exit_code
from .verify import StepCheck, VerificationReport, verify_certificate, verify_certificate_file

__all__ = [
    "Certificate",
    "Step",
    "RankZeroAssertion",
    "ConstructOptions",
    "PipelineConfig",
    "RunLog",
    "StepCheck",
    "VerificationReport",
    "PipelineError",
    "CertificateParseError",
    "OracleMismatchError",
    "PipelineConfigError",
    "ABSENT_PROVENANCE",
    "STEP_ANCHORS",
    "STEP_NAMES",
    "EXIT_CODES",
    "canonical_json",
    "body_digest",
    "conclusion_status",
    "exit_code",
    "construct_instance",
    "parse_certificate",
    "load_certificate",
    "load_oracle",
    "verify_certificate",
    "verify_certificate_file",
]

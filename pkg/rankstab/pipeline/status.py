from __future__ import annotations

from typing import Sequence

EXIT_CODES = {"verified": 0, "conditional": 2, "failed": 1}


def conclusion_status(step_statuses: Sequence[str], assertion_count: int) -> str:
    """verified needs every step verified and no assertion; conditional tolerates asserted steps only."""
    if not step_statuses:
        return "failed"
    if assertion_count == 0 and all(status == "verified" for status in step_statuses):
        return "verified"
    non_oracle = [status for status in step_statuses if status != "asserted"]
    if assertion_count > 0 and all(status == "verified" for status in non_oracle):
        return "conditional"
    return "failed"


def exit_code(status: str) -> int:
    return EXIT_CODES.get(status, 1)

from __future__ import annotations

import copy
from typing import Any

import pytest

from rankstab.pipeline import Certificate, body_digest, construct_instance


@pytest.fixture(scope="session")
def q5_certificate() -> Certificate:
    return construct_instance(5, 1)


@pytest.fixture
def q5_payload(q5_certificate: Certificate) -> dict[str, Any]:
    return copy.deepcopy(q5_certificate.to_json())


@pytest.fixture
def redigest():
    def _redigest(payload: dict[str, Any]) -> dict[str, Any]:
        body = {key: value for key, value in payload.items() if key != "digest"}
        payload["digest"] = body_digest(body)
        return payload

    return _redigest

from __future__ import annotations

import copy
import json
import random
import re
from typing import Any

import rankstab.pipeline.construct as construct_module
import rankstab.triple_sieve as triple_sieve
from rankstab.pipeline import (
    CertificateParseError,
    Certificate,
    construct_instance,
    verify_certificate,
    verify_certificate_file,
)

_DECIMAL = re.compile(r"^-?\d+$")


def _step(payload: dict[str, Any], name: str) -> dict[str, Any]:
    for step in payload["steps"]:
        if step["name"] == name:
            return step
    raise AssertionError(f"missing step {name}")


def _bump(value: str) -> str:
    return str(int(value) + 1)


def _string_leaves(node: Any, path: tuple = ()) -> list[tuple]:
    if isinstance(node, dict):
        return [leaf for key, value in node.items() for leaf in _string_leaves(value, path + (key,))]
    if isinstance(node, list):
        return [leaf for index, value in enumerate(node) for leaf in _string_leaves(value, path + (index,))]
    if isinstance(node, str):
        return [path]
    return []


def _mutate(payload: dict[str, Any], path: tuple) -> None:
    parent = payload
    for key in path[:-1]:
        parent = parent[key]
    value = parent[path[-1]]
    parent[path[-1]] = _bump(value) if _DECIMAL.match(value) else value + "x"


def test_verify_round_trip_exits_conditional(q5_certificate: Certificate, tmp_path) -> None:
    path = tmp_path / "c.json"
    path.write_text(q5_certificate.dumps(), encoding="utf-8")
    report = verify_certificate_file(path)
    assert report.ok, report.to_json()
    assert report.recomputed_status == "conditional"
    assert report.exit_code == 2


def test_verify_does_not_need_the_search(q5_payload: dict[str, Any], monkeypatch) -> None:
    def _forbidden(*args: Any, **kwargs: Any) -> Any:
        raise AssertionError("verifier must not search")

    monkeypatch.setattr(construct_module, "construct_instance", _forbidden)
    monkeypatch.setattr(construct_module, "sieve_triples", _forbidden)
    monkeypatch.setattr(construct_module, "derive_twist_params", _forbidden)
    monkeypatch.setattr(construct_module, "build_positive_rank_witness", _forbidden)
    monkeypatch.setattr(triple_sieve, "sieve_triples", _forbidden)
    report = verify_certificate(q5_payload)
    assert report.exit_code == 2


def test_tampered_p3_fails_prime_triple(q5_payload: dict[str, Any], redigest) -> None:
    triple = _step(q5_payload, "prime_triple")["data"]
    triple["p3"]["a"] = _bump(triple["p3"]["a"])
    report = verify_certificate(redigest(q5_payload))
    assert "prime_triple" in report.failed_steps
    assert report.exit_code == 1


def test_tampered_witness_point_fails_positive_rank(q5_payload: dict[str, Any], redigest) -> None:
    point = _step(q5_payload, "positive_rank_witness")["data"]["point"]
    point["x"]["num"]["a"] = _bump(point["x"]["num"]["a"])
    report = verify_certificate(redigest(q5_payload))
    assert report.failed_steps == ["positive_rank_witness"]
    assert report.exit_code == 1


def test_tampered_torsion_count_is_detected(q5_payload: dict[str, Any], redigest) -> None:
    witnesses = _step(q5_payload, "positive_rank_witness")["data"]["certificate"]["torsion_bound"]["witnesses"]
    witnesses[0]["order"] = _bump(witnesses[0]["order"])
    report = verify_certificate(redigest(q5_payload))
    assert report.failed_steps == ["positive_rank_witness"]


def test_tampered_twist_parameter_is_detected(q5_payload: dict[str, Any], redigest) -> None:
    params = _step(q5_payload, "twist_parameters")["data"]
    params["a"], params["b"] = params["b"], params["a"]
    report = verify_certificate(redigest(q5_payload))
    assert "twist_parameters" in report.failed_steps


def test_tampered_anchor_is_detected(q5_payload: dict[str, Any], redigest) -> None:
    _step(q5_payload, "sigma_sets")["anchor"] = "S is whatever"
    report = verify_certificate(redigest(q5_payload))
    assert "sigma_sets" in report.failed_steps


def test_inflated_conclusion_status_is_detected(q5_payload: dict[str, Any], redigest) -> None:
    q5_payload["conclusion"]["status"] = "verified"
    report = verify_certificate(redigest(q5_payload))
    assert not report.ok
    assert report.recomputed_status == "conditional"
    assert report.exit_code == 1


def test_oracle_provenance_must_match_the_step(q5_payload: dict[str, Any], redigest) -> None:
    q5_payload["oracle_assertions"][0]["provenance"] = "trust me"
    report = verify_certificate(redigest(q5_payload))
    assert report.failed_steps == ["rank_zero_input"]


def test_fifty_single_field_mutations_are_all_detected(q5_payload: dict[str, Any]) -> None:
    rng = random.Random(7)
    leaves = [path for path in _string_leaves(q5_payload) if path != ("digest",)]
    assert len(leaves) > 50
    for path in rng.sample(leaves, 50):
        mutated = copy.deepcopy(q5_payload)
        _mutate(mutated, path)
        try:
            report = verify_certificate(mutated)
        except CertificateParseError:
            continue
        assert report.exit_code == 1, path
        assert any(problem.startswith("integrity") for problem in report.problems), path


def test_failed_certificate_verifies_as_failed() -> None:
    payload = construct_instance(4, 1).to_json()
    report = verify_certificate(payload)
    assert report.ok, report.to_json()
    assert report.recomputed_status == "failed"
    assert report.exit_code == 1


def test_schema_violation_raises_parse_error(q5_payload: dict[str, Any]) -> None:
    q5_payload["unexpected"] = True
    try:
        verify_certificate(q5_payload)
    except CertificateParseError as exc:
        assert exc.code == "certificate_parse_error"
        return
    raise AssertionError("Expected CertificateParseError.")


def test_unreadable_file_raises_parse_error(tmp_path) -> None:
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    try:
        verify_certificate_file(path)
    except CertificateParseError:
        return
    raise AssertionError("Expected CertificateParseError.")


def test_report_serializes(q5_payload: dict[str, Any]) -> None:
    report = verify_certificate(q5_payload)
    data = json.loads(json.dumps(report.to_json()))
    assert [step["name"] for step in data["steps"]][0] == "quadratic_extension"
    assert data["recomputed_status"] == "conditional"


def test_unknown_status_strings_fail_the_schema(q5_payload: dict[str, Any], redigest) -> None:
    for section in (lambda payload: payload["steps"][0], lambda payload: payload["conclusion"]):
        mutated = copy.deepcopy(q5_payload)
        section(mutated)["status"] = "maybe"
        try:
            verify_certificate(redigest(mutated))
        except CertificateParseError:
            continue
        raise AssertionError("Expected CertificateParseError for status 'maybe'.")

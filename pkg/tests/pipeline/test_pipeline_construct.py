from __future__ import annotations

import json

from rankstab.eisenstein import EisInt, FieldElem
from rankstab.pipeline import (
    ABSENT_PROVENANCE,
    STEP_ANCHORS,
    STEP_NAMES,
    Certificate,
    RankZeroAssertion,
    RunLog,
    construct_instance,
    load_oracle,
)
from rankstab.pipeline.errors import CertificateParseError


def test_q5_certificate_is_conditional_with_every_step_recorded(q5_certificate: Certificate) -> None:
    assert q5_certificate.status == "conditional"
    assert tuple(step.name for step in q5_certificate.steps) == STEP_NAMES
    for step in q5_certificate.steps:
        expected = "asserted" if step.name == "rank_zero_input" else "verified"
        assert step.status == expected, (step.name, step.diagnostics)
        assert step.to_json()["anchor"] == STEP_ANCHORS[step.name]


def test_q5_certificate_records_the_absent_oracle(q5_certificate: Certificate) -> None:
    assert len(q5_certificate.oracle_assertions) == 1
    assertion = q5_certificate.oracle_assertions[0]
    assert assertion.provenance == ABSENT_PROVENANCE
    assert assertion.n == FieldElem.of(125)


def test_q5_positive_rank_sub_statement_is_verified(q5_certificate: Certificate) -> None:
    sub_statements = q5_certificate.conclusion["sub_statements"]
    assert [item["status"] for item in sub_statements] == ["verified"]
    witness = q5_certificate.step("positive_rank_witness")
    assert witness is not None
    assert witness.data["certificate"]["status"] == "verified"


def test_q5_sigma_and_congruence_data(q5_certificate: Certificate) -> None:
    sigma = q5_certificate.step("sigma_sets")
    congruence = q5_certificate.step("congruence_system")
    assert sigma is not None and congruence is not None
    s_members = {EisInt.from_json(item) for item in sigma.data["S"]}
    assert s_members == {EisInt(1, -1), EisInt(2, 0)}
    assert congruence.data["depth_n"] == "5"


def test_local_conditions_cover_two_three_and_five(q5_certificate: Certificate) -> None:
    step = q5_certificate.step("local_conditions")
    assert step is not None
    listed = {EisInt.from_json(report["prime"]) for report in step.data["reports"]}
    assert {EisInt(1, -1), EisInt(2, 0), EisInt(5, 0)} <= listed
    assert step.data["status"] == "verified"


def test_certificate_serialization_is_canonical(q5_certificate: Certificate) -> None:
    text = q5_certificate.dumps()
    payload = json.loads(text)
    assert payload["digest"] == q5_certificate.to_json()["digest"]
    assert payload["inputs"]["norm_bound"] == "auto"
    assert text.endswith("\n")


def test_construct_is_reproducible(q5_certificate: Certificate) -> None:
    again = construct_instance(5, 1)
    assert again.dumps() == q5_certificate.dumps()


def test_supplied_oracle_is_recorded_verbatim(tmp_path) -> None:
    oracle_path = tmp_path / "oracle.json"
    oracle_path.write_text(
        json.dumps({"n": FieldElem.of(125).to_json(), "provenance": "2-isogeny descent, by hand"}),
        encoding="utf-8",
    )
    oracle = load_oracle(oracle_path)
    certificate = construct_instance(5, 1, oracle=oracle)
    assert certificate.status == "conditional"
    step = certificate.step("rank_zero_input")
    assert step is not None
    assert step.status == "asserted"
    assert step.data["provenance"] == "2-isogeny descent, by hand"


def test_mismatched_oracle_fails_the_oracle_step() -> None:
    oracle = RankZeroAssertion(n=FieldElem.of(7), provenance="wrong curve")
    certificate = construct_instance(5, 1, oracle=oracle)
    assert certificate.status == "failed"
    step = certificate.step("rank_zero_input")
    assert step is not None
    assert step.status == "failed"
    assert step.diagnostics[0].startswith("oracle_mismatch")
    assert certificate.step("positive_rank_witness") is None


def test_square_q_fails_at_the_first_step() -> None:
    certificate = construct_instance(4, 1)
    assert certificate.status == "failed"
    assert [step.name for step in certificate.steps] == ["quadratic_extension"]
    assert certificate.steps[0].status == "failed"
    assert certificate.steps[0].diagnostics[0].startswith("trivial_extension")
    assert certificate.oracle_assertions == ()


def test_run_log_collects_step_lines(tmp_path) -> None:
    run_log = RunLog(run_id="abc123", label="q4", start_ms=0.0)
    construct_instance(4, 1, run_log=run_log)
    assert any("step=quadratic_extension status=failed" in line for line in run_log.lines)
    path = run_log.write(tmp_path / "logs")
    assert path.name.startswith("construct-q4-")
    assert path.name.endswith("-abc123.log")
    assert "construct_done run_id=abc123 status=failed" in path.read_text(encoding="utf-8")


def test_malformed_oracle_file_raises_parse_error(tmp_path) -> None:
    oracle_path = tmp_path / "oracle.json"
    oracle_path.write_text(json.dumps({"n": {"num": {"a": "x"}}, "provenance": ""}), encoding="utf-8")
    try:
        load_oracle(oracle_path)
    except CertificateParseError as exc:
        assert exc.code == "certificate_parse_error"
        return
    raise AssertionError("Expected CertificateParseError.")

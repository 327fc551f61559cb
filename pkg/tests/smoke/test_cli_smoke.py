from __future__ import annotations

import json
from pathlib import Path


def _write_config(tmp_path: Path) -> Path:
    config = {"pipeline": {"depth_n": 5, "write_run_log": True, "run_log_dir": str(tmp_path / "logs")}}
    path = tmp_path / "runtime.json"
    path.write_text(json.dumps(config), encoding="utf-8")
    return path


def test_construct_then_verify_exits_conditional(run_cli, tmp_path: Path) -> None:
    config = _write_config(tmp_path)
    certificate = tmp_path / "c.json"

    construct = run_cli("--config", str(config), "construct", "--q", "5", "--r", "1", "--out", str(certificate))
    assert construct.returncode == 2, construct.stderr
    assert "[pipeline] step_done" in construct.stderr
    assert list((tmp_path / "logs").glob("construct-q5_0-r1_0-*.log"))

    verify = run_cli("--config", str(config), "verify", str(certificate))
    assert verify.returncode == 2, verify.stderr
    assert "recomputed=conditional" in verify.stdout

    payload = json.loads(certificate.read_text(encoding="utf-8"))
    payload["conclusion"]["statement"] = "rank goes up"
    certificate.write_text(json.dumps(payload), encoding="utf-8")
    corrupted = run_cli("--config", str(config), "verify", str(certificate))
    assert corrupted.returncode == 1
    assert "integrity" in corrupted.stderr


def test_primes_classify_prints_a_table(run_cli, tmp_path: Path) -> None:
    result = run_cli("--config", str(_write_config(tmp_path)), "primes", "classify", "--q", "5", "--max-norm", "100")
    assert result.returncode == 0, result.stderr
    lines = result.stdout.strip().splitlines()
    assert lines[0].split() == ["prime", "norm", "kind", "in", "K"]
    kinds = {line.split()[-1] for line in lines[1:]}
    assert kinds == {"split", "inert", "ramified"}
    summary = next(line for line in result.stderr.splitlines() if "classify_done" in line)
    tally = dict(item.split("=") for item in summary.split()[2:])
    assert set(tally) == kinds
    assert sum(int(count) for count in tally.values()) == len(lines) - 1


def test_raw_sieve_streams_json_lines(run_cli, tmp_path: Path) -> None:
    result = run_cli(
        "--config", str(_write_config(tmp_path)), "sieve", "--beta", "2", "--norm-bound", "50", "--max-results", "3"
    )
    assert result.returncode == 0, result.stderr
    triples = [json.loads(line) for line in result.stdout.strip().splitlines()]
    assert len(triples) == 3
    assert all(set(triple) == {"p1", "p2", "p3", "beta"} for triple in triples)


def test_curve_count_and_bad_input(run_cli, tmp_path: Path) -> None:
    config = str(_write_config(tmp_path))
    result = run_cli("--config", config, "curve", "count", "--n", "2", "--prime", "3+w")
    assert result.returncode == 0, result.stderr
    assert int(result.stdout.strip()) > 0

    bad = run_cli("--config", config, "curve", "count", "--n", "2", "--prime", "4")
    assert bad.returncode == 1
    assert bad.stderr.strip()

from __future__ import annotations

import sys
import time
import uuid
from typing import Any, Callable, Optional, TypeVar

from rankstab.construction import ConstructionError, CoverDatum, build_positive_rank_witness
from rankstab.curve import CurveConfig, CurveError
from rankstab.eisenstein import EisensteinError, EisInt, FieldElem
from rankstab.quad_ext import QuadExtConfig, QuadExtError, build_sigma, make_quad_ext
from rankstab.selmer_local import SelmerLocalError, preservation_report
from rankstab.triple_sieve import (
    SieveConfig,
    SieveError,
    TwistParams,
    build_congruence_system,
    default_norm_bound,
    derive_twist_params,
    sieve_triples,
    twist_params_hints,
)

from .errors import PipelineError
from .models import (
    ABSENT_PROVENANCE,
    CONCLUSION_STATEMENT,
    POSITIVE_RANK_STATEMENT,
    Certificate,
    ConstructOptions,
    PipelineConfig,
    RankZeroAssertion,
    RunLog,
    Step,
)
from .status import conclusion_status

T = TypeVar("T")

STEP_FAILURES = (
    EisensteinError,
    QuadExtError,
    CurveError,
    SelmerLocalError,
    SieveError,
    ConstructionError,
    PipelineError,
)


class _Halt(Exception):
    pass


class _StepRecorder:
    def __init__(self, run_id: str, run_log: Optional[RunLog]) -> None:
        self.run_id = run_id
        self.run_log = run_log
        self.steps: list[Step] = []

    def add(self, step: Step, started_ms: float) -> Step:
        duration_ms = int(time.time() * 1000 - started_ms)
        self.steps.append(step)
        self.log(f"step_done run_id={self.run_id} step={step.name} status={step.status} duration_ms={duration_ms}")
        for diagnostic in step.diagnostics:
            self.log(f"step_diagnostic run_id={self.run_id} step={step.name} {diagnostic}")
        return step

    def run(self, name: str, action: Callable[[], T], describe: Callable[[T], dict[str, Any]]) -> T:
        started = time.time() * 1000
        try:
            value = action()
            data = describe(value)
        except STEP_FAILURES as exc:
            self.add(Step(name=name, data={}, status="failed", diagnostics=(str(exc),)), started)
            raise _Halt() from exc
        self.add(Step(name=name, data=data, status="verified"), started)
        return value

    def log(self, message: str) -> None:
        line = f"[pipeline] {message}"
        print(line, file=sys.stderr)
        if self.run_log is not None:
            self.run_log.add(line)


def _inputs(q_raw: EisInt, r: EisInt, options: ConstructOptions) -> dict[str, Any]:
    return {
        "q": q_raw.to_json(),
        "r": r.to_json(),
        "depth_n": str(options.depth_n),
        "norm_bound": "auto" if options.norm_bound is None else str(options.norm_bound),
        "seed": str(options.seed),
        "max_results": str(options.max_results),
    }


def construct_instance(
    q_raw: EisInt | int,
    r: EisInt | int,
    options: Optional[ConstructOptions] = None,
    oracle: Optional[RankZeroAssertion] = None,
    quad_config: Optional[QuadExtConfig] = None,
    curve_config: Optional[CurveConfig] = None,
    sieve_config: Optional[SieveConfig] = None,
    pipeline_config: Optional[PipelineConfig] = None,
    run_log: Optional[RunLog] = None,
) -> Certificate:
    options = options or ConstructOptions()
    pipeline_cfg = pipeline_config or PipelineConfig()
    quad_cfg = quad_config or QuadExtConfig()
    base_sieve = sieve_config or SieveConfig()
    q_raw = EisInt.coerce(q_raw)
    r = EisInt.coerce(r)
    run_id = run_log.run_id if run_log is not None else uuid.uuid4().hex[:12]
    recorder = _StepRecorder(run_id, run_log)
    recorder.log(f"construct_start run_id={run_id} q={q_raw} r={r} depth_n={options.depth_n} seed={options.seed}")

    assertions: list[RankZeroAssertion] = []
    witness: Optional[CoverDatum] = None
    try:
        ext = recorder.run(
            "quadratic_extension",
            lambda: make_quad_ext(q_raw, quad_cfg.two_adic_depth),
            lambda value: {"q_raw": q_raw.to_json(), **value.to_json()},
        )
        sigma = recorder.run(
            "sigma_sets",
            lambda: build_sigma(ext, r),
            lambda value: {"r": r.to_json(), **value.to_json()},
        )
        system = recorder.run(
            "congruence_system",
            lambda: build_congruence_system(ext, sigma, r, options.depth_n, quad_cfg, base_sieve),
            lambda value: value.to_json(),
        )
        sieve_cfg = SieveConfig(
            norm_bound=options.norm_bound,
            max_results=options.max_results,
            threads=options.threads,
            seed=options.seed,
            max_congruence_attempts=base_sieve.max_congruence_attempts,
        )
        norm_bound = options.norm_bound if options.norm_bound is not None else default_norm_bound(system)
        hints = tuple(sigma.S) + tuple(ext.ramified)

        started = time.time() * 1000
        try:
            triples = sieve_triples(system, r, norm_bound=norm_bound, config=sieve_cfg)
        except STEP_FAILURES as exc:
            recorder.add(Step("prime_triple", {}, "failed", (str(exc),)), started)
            raise _Halt() from exc

        params: Optional[TwistParams] = None
        chosen_index = 0
        params_failure: Optional[str] = None
        for chosen_index, triple in enumerate(triples):
            try:
                params = derive_twist_params(triple, system, r)
                witness = build_positive_rank_witness(params, curve_config, hints)
            except STEP_FAILURES as exc:
                params_failure = str(exc)
                break
            if witness.certificate.nontorsion:
                break
            recorder.log(f"witness_torsion run_id={run_id} candidate={chosen_index}")

        triple = triples[chosen_index]
        recorder.add(
            Step(
                "prime_triple",
                {
                    **triple.to_json(),
                    "norm_bound": str(norm_bound),
                    "candidate_index": str(chosen_index),
                    "candidates": str(len(triples)),
                },
                "verified",
            ),
            started,
        )
        if params_failure is not None or params is None:
            recorder.add(Step("twist_parameters", {}, "failed", (params_failure or "no twist parameters",)), started)
            raise _Halt()
        recorder.add(Step("twist_parameters", _params_data(params), "verified"), started)

        started = time.time() * 1000
        try:
            report = preservation_report(ext, sigma, r, params.t, twist_params_hints(params) + hints)
        except STEP_FAILURES as exc:
            recorder.add(Step("local_conditions", {}, "failed", (str(exc),)), started)
            raise _Halt() from exc
        diagnostics = tuple(f"local check failed at {prime}" for prime in report.failing_primes)
        if not report.blanket.passed:
            diagnostics += ("blanket coverage audit failed",)
        recorder.add(Step("local_conditions", report.to_json(), report.status, diagnostics), started)

        started = time.time() * 1000
        assertion = oracle or RankZeroAssertion(n=FieldElem.of(ext.q**3 * r * r), provenance=ABSENT_PROVENANCE)
        assertions.append(assertion)
        try:
            assertion.check_against(ext.q, r)
        except PipelineError as exc:
            recorder.add(Step("rank_zero_input", assertion.to_json(), "failed", (str(exc),)), started)
            raise _Halt() from exc
        recorder.add(Step("rank_zero_input", assertion.to_json(), "asserted"), started)

        started = time.time() * 1000
        if witness is not None and witness.certificate.nontorsion:
            recorder.add(Step("positive_rank_witness", witness.to_json(), "verified"), started)
        else:
            data = witness.to_json() if witness is not None else {}
            recorder.add(
                Step("positive_rank_witness", data, "failed", ("every candidate witness point is torsion",)),
                started,
            )
    except _Halt:
        pass

    steps = tuple(recorder.steps)
    status = conclusion_status([step.status for step in steps], len(assertions))
    witness_step = next((step for step in steps if step.name == "positive_rank_witness"), None)
    positive = "verified" if witness_step is not None and witness_step.status == "verified" else "failed"
    certificate = Certificate(
        version=pipeline_cfg.certificate_version,
        inputs=_inputs(q_raw, r, options),
        oracle_assertions=tuple(assertions),
        steps=steps,
        conclusion={
            "statement": CONCLUSION_STATEMENT,
            "status": status,
            "sub_statements": [{"statement": POSITIVE_RANK_STATEMENT, "status": positive}],
        },
    )
    recorder.log(f"construct_done run_id={run_id} status={status}")
    return certificate


def _params_data(params: TwistParams) -> dict[str, Any]:
    return {
        "a": params.a.to_json(),
        "b": params.b.to_json(),
        "t": params.t.to_json(),
        "r": params.r.to_json(),
    }

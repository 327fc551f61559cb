from __future__ import annotations

import argparse
import json
import sys
import time
import uuid
from pathlib import Path
from typing import Any

from rankstab.config_validator import ConfigValidator, RuntimeConfigs
from rankstab.construction import ConstructionError
from rankstab.curve import CurveError, count_points, curve_from_n
from rankstab.eisenstein import EisensteinError, EisInt, parse_eis, prime_elem, primes_up_to
from rankstab.quad_ext import SPLITTING_TYPES, QuadExtError, build_sigma, make_quad_ext, splitting_type
from rankstab.selmer_local import SelmerLocalError, is_silent, verify_silence_bruteforce
from rankstab.triple_sieve import (
    SieveConfig,
    SieveError,
    build_congruence_system,
    derive_twist_params,
    sieve_triples,
    trivial_congruence_system,
    twist_class_key,
    twist_params_hints,
)

from .construct import construct_instance
from .errors import PipelineError
from .models import ConstructOptions, RunLog
from .schema import load_oracle
from .status import exit_code
from .verify import first_problem, verify_certificate_file

PACKAGE_ERRORS = (
    EisensteinError,
    QuadExtError,
    CurveError,
    SelmerLocalError,
    SieveError,
    ConstructionError,
    PipelineError,
)


def parse_args(argv: list[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="rankstab", description="Rank stability certificates over Q(zeta_3).")
    parser.add_argument("--config", default="config/runtime.json", help="Path to runtime.json.")
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="Run the construction and write a certificate.")
    construct.add_argument("--q", required=True, help="Eisenstein integer, e.g. 5 or 3+w or 3,1.")
    construct.add_argument("--r", required=True)
    construct.add_argument("--depth", type=int, default=None)
    construct.add_argument("--norm-bound", type=int, default=None)
    construct.add_argument("--seed", type=int, default=None)
    construct.add_argument("--max-results", type=int, default=None)
    construct.add_argument("--threads", type=int, default=None)
    construct.add_argument("--oracle", default=None, help="JSON file asserting the rank-0 input.")
    construct.add_argument("--out", required=True)

    verify = commands.add_parser("verify", help="Re-check a certificate without searching.")
    verify.add_argument("file")
    verify.add_argument("--json", action="store_true", help="Print the full verification report.")

    sieve = commands.add_parser("sieve", help="Stream prime triples as JSON lines.")
    _add_sieve_arguments(sieve)
    sieve.add_argument("--beta", default=None, help="Raw mode: C = 1 with this beta.")

    classes = commands.add_parser("classes", help="List distinct twist classes among sieved triples.")
    _add_sieve_arguments(classes)

    primes = commands.add_parser("primes", help="Prime sweeps.")
    primes_commands = primes.add_subparsers(dest="primes_command", required=True)
    classify = primes_commands.add_parser("classify")
    classify.add_argument("--q", required=True)
    classify.add_argument("--max-norm", type=int, required=True)
    silence = primes_commands.add_parser("silence")
    silence.add_argument("--n", required=True)
    silence.add_argument("--max-norm", type=int, required=True)

    curve = commands.add_parser("curve", help="Curve utilities.")
    curve_commands = curve.add_subparsers(dest="curve_command", required=True)
    count = curve_commands.add_parser("count")
    count.add_argument("--n", required=True)
    count.add_argument("--prime", required=True)
    return parser.parse_args(argv)


def _add_sieve_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--q", default=None)
    parser.add_argument("--r", default="1")
    parser.add_argument("--depth", type=int, default=None)
    parser.add_argument("--norm-bound", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--max-results", type=int, default=None)
    parser.add_argument("--threads", type=int, default=None)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(sys.argv[1:] if argv is None else argv)
    try:
        configs = ConfigValidator().validate_startup(args.config)
        if args.command == "construct":
            return _construct(args, configs)
        if args.command == "verify":
            return _verify(args)
        if args.command == "sieve":
            return _sieve(args, configs)
        if args.command == "classes":
            return _classes(args, configs)
        if args.command == "primes" and args.primes_command == "classify":
            return _classify(args)
        if args.command == "primes":
            return _silence(args, configs)
        return _count(args)
    except PACKAGE_ERRORS as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"rankstab_cli_error: {exc}", file=sys.stderr)
        return 1


def _sieve_config(args: argparse.Namespace, base: SieveConfig) -> SieveConfig:
    cfg = SieveConfig(
        norm_bound=args.norm_bound if args.norm_bound is not None else base.norm_bound,
        max_results=args.max_results if args.max_results is not None else base.max_results,
        threads=args.threads if args.threads is not None else base.threads,
        seed=args.seed if args.seed is not None else base.seed,
        max_congruence_attempts=base.max_congruence_attempts,
    )
    cfg.validate()
    return cfg


def _construct(args: argparse.Namespace, configs: RuntimeConfigs) -> int:
    q, r = parse_eis(args.q), parse_eis(args.r)
    sieve_cfg = _sieve_config(args, configs.triple_sieve)
    options = ConstructOptions(
        depth_n=args.depth if args.depth is not None else configs.pipeline.depth_n,
        norm_bound=sieve_cfg.norm_bound,
        seed=sieve_cfg.seed,
        max_results=sieve_cfg.max_results,
        threads=sieve_cfg.threads,
    )
    oracle = load_oracle(args.oracle) if args.oracle else None
    run_log = None
    if configs.pipeline.write_run_log:
        run_log = RunLog(run_id=uuid.uuid4().hex[:12], label=_label(q, r), start_ms=time.time() * 1000)

    certificate = construct_instance(
        q,
        r,
        options,
        oracle=oracle,
        quad_config=configs.quad_ext,
        curve_config=configs.curve,
        sieve_config=sieve_cfg,
        pipeline_config=configs.pipeline,
        run_log=run_log,
    )
    out_path = Path(args.out).expanduser().resolve()
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(certificate.dumps(), encoding="utf-8")
    print(f"Wrote certificate to {out_path} status={certificate.status}")
    if run_log is not None:
        log_path = run_log.write(configs.pipeline.run_log_dir)
        print(f"[pipeline] run_log_written path={log_path}", file=sys.stderr)
    return exit_code(certificate.status)


def _label(q: EisInt, r: EisInt) -> str:
    return f"q{q.a}_{q.b}-r{r.a}_{r.b}"


def _verify(args: argparse.Namespace) -> int:
    report = verify_certificate_file(args.file)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(f"recorded={report.recorded_status} recomputed={report.recomputed_status} ok={report.ok}")
    problem = first_problem(report)
    if problem is not None:
        print(f"[verify] problem {problem}", file=sys.stderr)
    return report.exit_code


def _system(args: argparse.Namespace, configs: RuntimeConfigs, beta: str | None = None) -> Any:
    if beta is not None:
        return trivial_congruence_system(parse_eis(beta), parse_eis(args.r))
    if args.q is None:
        raise PipelineError("pipeline_cli_error", "Pass --q (with --r) or --beta.")
    ext = make_quad_ext(parse_eis(args.q), configs.quad_ext.two_adic_depth)
    r = parse_eis(args.r)
    sigma = build_sigma(ext, r)
    depth = args.depth if args.depth is not None else configs.pipeline.depth_n
    return build_congruence_system(ext, sigma, r, depth, configs.quad_ext, configs.triple_sieve)


def _sieve(args: argparse.Namespace, configs: RuntimeConfigs) -> int:
    system = _system(args, configs, args.beta)
    for triple in sieve_triples(system, config=_sieve_config(args, configs.triple_sieve)):
        print(json.dumps(triple.to_json(), sort_keys=True, separators=(",", ":")))
    return 0


def _classes(args: argparse.Namespace, configs: RuntimeConfigs) -> int:
    system = _system(args, configs)
    seen: dict[tuple[tuple[int, int, int], ...], dict[str, Any]] = {}
    for triple in sieve_triples(system, config=_sieve_config(args, configs.triple_sieve)):
        params = derive_twist_params(triple, system)
        key = twist_class_key(params.t, twist_params_hints(params) + tuple(system.support))
        seen.setdefault(key, {"t": params.t.to_json(), "class": [list(item) for item in key]})
    for entry in seen.values():
        print(json.dumps(entry, sort_keys=True, separators=(",", ":")))
    print(f"distinct_classes={len(seen)}", file=sys.stderr)
    return 0


def _classify(args: argparse.Namespace) -> int:
    ext = make_quad_ext(parse_eis(args.q))
    print(f"{'prime':>12} {'norm':>8} {'kind':>9} {'in K':>9}")
    tally = dict.fromkeys(SPLITTING_TYPES, 0)
    for prime in primes_up_to(args.max_norm):
        kind = splitting_type(ext, prime)
        tally[kind] += 1
        print(f"{str(prime):>12} {prime.norm:>8} {prime.kind:>9} {kind:>9}")
    summary = " ".join(f"{name}={count}" for name, count in tally.items())
    print(f"[quad_ext] classify_done {summary}", file=sys.stderr)
    return 0


def _silence(args: argparse.Namespace, configs: RuntimeConfigs) -> int:
    n = parse_eis(args.n)
    checked = mismatches = 0
    for prime in primes_up_to(args.max_norm):
        if prime.kind == "ramified" or prime.characteristic == 2 or (n % prime.value).is_zero():
            continue
        if not is_silent(n, prime):
            continue
        outcome = verify_silence_bruteforce(n, prime, configs.selmer_local)
        if outcome is None:
            continue
        checked += 1
        if not outcome:
            mismatches += 1
        print(json.dumps({"prime": prime.to_json(), "silent": True, "bruteforce": outcome}, sort_keys=True))
    print(f"[selmer_local] silence_sweep n={n} checked={checked} mismatches={mismatches}", file=sys.stderr)
    return 1 if mismatches else 0


def _count(args: argparse.Namespace) -> int:
    curve = curve_from_n(parse_eis(args.n))
    prime = prime_elem(parse_eis(args.prime))
    print(count_points(curve, prime))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

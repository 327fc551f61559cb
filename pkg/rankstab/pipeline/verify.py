from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from pathlib import Path
from typing import Any, Callable, Optional

from rankstab.curve import CurveError, CurveModel, CurvePoint, count_points, satisfies, scalar_mul
from rankstab.eisenstein import (
    LAMBDA,
    OMEGA,
    OMEGA2,
    ONE,
    RAMIFIED_PRIME,
    TWO,
    EisensteinError,
    EisInt,
    FieldElem,
    PrimeElem,
    divides,
    eis_sqrt,
    euclid_gcd,
    exact_div,
    factor,
    is_local_power,
    is_power_mod,
    is_prime_element,
    normalize,
    prime_elem,
    valuation,
)
from rankstab.selmer_local import SelmerLocalError, is_silent

from .models import ABSENT_PROVENANCE, ORACLE_STEP, STEP_ANCHORS, STEP_NAMES, body_digest
from .schema import CertificateDoc, load_certificate, parse_certificate
from .status import conclusion_status, exit_code

_UNIT_SQUARES = (ONE, OMEGA, OMEGA2)


@dataclass(frozen=True)
class StepCheck:
    name: str
    recorded_status: str
    ok: bool
    problems: tuple[str, ...] = ()

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "recorded_status": self.recorded_status, "ok": self.ok, "problems": list(self.problems)}


@dataclass(frozen=True)
class VerificationReport:
    recorded_status: str
    recomputed_status: str
    checks: tuple[StepCheck, ...]
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems and all(check.ok for check in self.checks)

    @property
    def failed_steps(self) -> list[str]:
        return [check.name for check in self.checks if not check.ok]

    @property
    def exit_code(self) -> int:
        return exit_code(self.recomputed_status) if self.ok else 1

    def to_json(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "recorded_status": self.recorded_status,
            "recomputed_status": self.recomputed_status,
            "steps": [check.to_json() for check in self.checks],
            "problems": list(self.problems),
        }


@dataclass
class _Context:
    """Values established by earlier steps; later steps re-check against them."""

    inputs: dict[str, Any]
    oracle_assertions: list[dict[str, Any]]
    values: dict[str, Any] = field(default_factory=dict)

    def need(self, *names: str) -> list[Any]:
        missing = [name for name in names if name not in self.values]
        if missing:
            raise _Dependency(", ".join(missing))
        return [self.values[name] for name in names]


class _Dependency(Exception):
    pass


def _eis(data: Any) -> EisInt:
    return EisInt.from_json(data)


def _field(data: Any) -> FieldElem:
    return FieldElem.from_json(data)


def _prime_list(data: list[Any]) -> list[PrimeElem]:
    return [prime_elem(_eis(item)) for item in data]


def _is_prime(x: EisInt) -> bool:
    return not x.is_zero() and not x.is_unit() and is_prime_element(x)


def _values(primes: list[PrimeElem]) -> set[EisInt]:
    return {prime.value for prime in primes}


def _support(x: FieldElem, hints: tuple[PrimeElem, ...] = ()) -> list[PrimeElem]:
    primes: list[PrimeElem] = []
    for part in (x.num, x.den):
        if not part.is_unit():
            primes.extend(factor(part, hints).support)
    return primes


def _is_split(q: EisInt, ramified: set[EisInt], prime: PrimeElem) -> bool:
    return prime.value not in ramified and is_local_power(q, prime, 2)


def _is_inert(q: EisInt, ramified: set[EisInt], prime: PrimeElem) -> bool:
    return prime.value not in ramified and not is_local_power(q, prime, 2)


def _point(data: Any) -> CurvePoint:
    if data.get("infinity") is True:
        return CurvePoint.infinity()
    return CurvePoint(_field(data["x"]), _field(data["y"]))


def _check_quadratic_extension(data: dict[str, Any], ctx: _Context) -> list[str]:
    problems: list[str] = []
    q_raw, q = _eis(data["q_raw"]), _eis(data["q"])
    ramified = _prime_list(data["ramified"])
    if q_raw != _eis(ctx.inputs["q"]):
        problems.append("q_raw differs from the inputs")
    if q.is_zero() or not divides(q, q_raw):
        problems.append("q does not divide q_raw")
    elif not any(eis_sqrt(exact_div(q_raw, q) * unit) is not None for unit in _UNIT_SQUARES):
        problems.append("q_raw / q is not a square")
    if not q.is_zero():
        if eis_sqrt(q) is not None:
            problems.append("q is a square; K/F is trivial")
        if divides(LAMBDA, q):
            problems.append("1-w ramifies in K")
        odd = [prime for prime, exponent in factor(q).factors if exponent % 2]
        expected = _values(odd)
        if not divides(2, q) and not is_power_mod(q, TWO.value**2, 2):
            expected.add(TWO.value)
        if _values(ramified) != expected:
            problems.append("ramified primes do not match the factorization of q")
    ctx.values.update(q_raw=q_raw, q=q, ramified=_values(ramified))
    return problems


def _check_sigma_sets(data: dict[str, Any], ctx: _Context) -> list[str]:
    q, ramified = ctx.need("q", "ramified")
    problems: list[str] = []
    r = _eis(data["r"])
    S = _prime_list(data["S"])
    superset = _prime_list(data["S_prime_superset"])
    if r != _eis(ctx.inputs["r"]):
        problems.append("r differs from the inputs")
    expected = {RAMIFIED_PRIME.value, TWO.value} | _values(list(factor(q).support))
    if not r.is_unit() and not r.is_zero():
        expected |= _values(list(factor(r).support))
    if _values(superset) != expected:
        problems.append("S' superset is not {1-w, 2} plus the support of q r")
    expected_s = {
        prime.value for prime in superset if prime.value == LAMBDA or _is_split(q, ramified, prime)
    }
    if _values(S) != expected_s:
        problems.append("S is not 1-w plus the split primes of the superset")
    ctx.values.update(r=r, S=S)
    return problems


def _check_congruence_system(data: dict[str, Any], ctx: _Context) -> list[str]:
    r, S = ctx.need("r", "S")
    problems: list[str] = []
    modulus = _eis(data["modulus"])
    targets = [_eis(item) for item in data["targets"]]
    beta, gamma = _eis(data["beta"]), _eis(data["gamma"])
    depth = int(data["depth_n"])
    depth_map = {_eis(item["prime"]): int(item["exponent"]) for item in data["depth_map"]}
    if _eis(data["r"]) != r:
        problems.append("r differs from the Sigma step")
    if str(depth) != ctx.inputs["depth_n"]:
        problems.append("depth_n differs from the inputs")
    product = ONE
    for prime in S:
        product = product * prime.value
    if gamma != normalize(product):
        problems.append("gamma is not the product of S")
    if beta != 2 * r * gamma ** (3 * depth):
        problems.append("beta != 2 r gamma^(3n)")
    if depth_map != {prime.value: depth for prime in S}:
        problems.append("depth map does not cover S at depth n")
    if len(targets) != 3 or modulus.is_zero():
        return problems + ["malformed targets"]
    u1, u2, u3 = targets
    for prime in S:
        local = prime.value**depth
        if not divides(local, modulus):
            problems.append(f"modulus not divisible by ({prime})^{depth}")
        if not ((u2 - 1) % local).is_zero() or not ((u3 - 1) % local).is_zero():
            problems.append(f"u2, u3 not 1 modulo ({prime})^{depth}")
    if not ((u1 + beta * u2 - u3) % modulus).is_zero():
        problems.append("u1 + beta u2 != u3 mod C")
    if not modulus.is_unit() and any(euclid_gcd(u, modulus) != ONE for u in targets):
        problems.append("a target is not a unit mod C")
    ctx.values.update(modulus=modulus, targets=targets, beta=beta, gamma=gamma, depth=depth)
    return problems


def _check_prime_triple(data: dict[str, Any], ctx: _Context) -> list[str]:
    modulus, targets, beta = ctx.need("modulus", "targets", "beta")
    problems: list[str] = []
    p1, p2, p3 = _eis(data["p1"]), _eis(data["p2"]), _eis(data["p3"])
    bound = int(data["norm_bound"])
    if _eis(data["beta"]) != beta:
        problems.append("beta differs from the congruence step")
    if p1 + beta * p2 != p3:
        problems.append("p1 + beta p2 != p3")
    for label, value in (("p1", p1), ("p2", p2), ("p3", p3)):
        if not _is_prime(value):
            problems.append(f"{label} is not prime")
    for label, value, target in zip(("p1", "p2", "p3"), (p1, p2, p3), targets):
        if not ((value - target) % modulus).is_zero():
            problems.append(f"{label} misses its congruence target")
    if p1.norm > bound or p2.norm > bound:
        problems.append("p1 or p2 exceeds the norm bound")
    if bound < modulus.norm**2:
        problems.append("norm bound below N(C)^2")
    if ctx.inputs["norm_bound"] not in ("auto", str(bound)):
        problems.append("norm bound differs from the inputs")
    ctx.values.update(p1=p1, p2=p2, p3=p3)
    return problems


def _check_twist_parameters(data: dict[str, Any], ctx: _Context) -> list[str]:
    q, ramified, r, S, gamma, depth, p1, p2, p3 = ctx.need(
        "q", "ramified", "r", "S", "gamma", "depth", "p1", "p2", "p3"
    )
    problems: list[str] = []
    a, b, t = _field(data["a"]), _field(data["b"]), _field(data["t"])
    if _eis(data["r"]) != r:
        problems.append("r differs from the Sigma step")
    if a != FieldElem.of(p1, p3):
        problems.append("a != p1/p3")
    if b != FieldElem.of(gamma ** (3 * depth) * p2, p3):
        problems.append("b != gamma^(3n) p2/p3")
    if t != a * b:
        problems.append("t != ab")
    if a + 2 * r * b != FieldElem.of(1):
        problems.append("a + 2rb != 1")
    hints = tuple(prime_elem(value) for value in (p1, p2, p3)) + tuple(S)
    s_values = _values(S)
    for label, value in (("a", a), ("b", b)):
        if value.is_zero():
            problems.append(f"{label} is zero")
            continue
        for prime in _support(value, hints):
            if prime.value not in s_values and not _is_inert(q, ramified, prime):
                problems.append(f"{label} is not a Sigma-unit at {prime}")
    if not t.is_zero():
        for prime in S:
            if not is_local_power(t, prime, 3):
                problems.append(f"t is not a cube at {prime}")
    ctx.values.update(a=a, b=b, t=t, hints=hints)
    return problems


def _expected_report(
    prime: PrimeElem,
    s_values: set[EisInt],
    q: EisInt,
    ramified: set[EisInt],
    t: FieldElem,
    n_base: FieldElem,
    n_twisted: FieldElem,
) -> tuple[str, list[tuple[str, bool]]]:
    if prime.value in s_values:
        return "in_S_isomorphic", [("t is a local cube", is_local_power(t, prime, 3))]
    not_over_3 = prime.value != LAMBDA
    if not_over_3 and (prime.value in ramified or not is_local_power(q, prime, 2)):
        return "silent", [
            ("n non-square locally", is_silent(n_base, prime)),
            ("twisted n non-square locally", is_silent(n_twisted, prime)),
            ("prime does not divide 3", not_over_3),
        ]

    def good(n: FieldElem) -> bool:
        v = valuation(n.num, prime.value) - valuation(n.den, prime.value)
        return prime.characteristic not in (2, 3) and v % 6 == 0

    return "good_unramified", [
        ("prime does not divide 3", not_over_3),
        ("good reduction for n", good(n_base)),
        ("good reduction for twisted n", good(n_twisted)),
    ]


def _check_local_conditions(data: dict[str, Any], ctx: _Context) -> list[str]:
    q, ramified, r, S, t, hints = ctx.need("q", "ramified", "r", "S", "t", "hints")
    problems: list[str] = []
    n_base = FieldElem.of(q**3 * r * r)
    n_twisted = n_base * t * t
    if _eis(data["q"]) != q or _eis(data["r"]) != r or _field(data["t"]) != t:
        problems.append("q, r or t differ from earlier steps")
    if _field(data["n_base"]) != n_base or _field(data["n_twisted"]) != n_twisted:
        problems.append("n_base or n_twisted is wrong")

    s_values = _values(S)
    listed: set[EisInt] = set()
    for report in data["reports"]:
        prime = prime_elem(_eis(report["prime"]))
        listed.add(prime.value)
        case, checks = _expected_report(prime, s_values, q, ramified, t, n_base, n_twisted)
        recorded = [(check["name"], check["ok"]) for check in report["checks"]]
        if report["case"] != case:
            problems.append(f"case at {prime} should be {case}")
        elif recorded != checks:
            problems.append(f"checks at {prime} do not recompute")
        if not all(ok for _, ok in checks):
            problems.append(f"local condition fails at {prime}")

    required = {RAMIFIED_PRIME.value, TWO.value} | _values(_support(n_twisted, hints)) | _values(_support(n_base))
    if not required <= listed:
        problems.append("report coverage misses a prime of 6 q r t")
    if not all(check["ok"] for check in data["blanket"]["checks"]):
        problems.append("blanket coverage audit failed")
    if data["status"] != "verified":
        problems.append("local condition report is not verified")
    return problems


def _check_rank_zero_input(data: dict[str, Any], ctx: _Context) -> list[str]:
    q, r = ctx.need("q", "r")
    problems: list[str] = []
    n = _field(data["n"])
    if n != FieldElem.of(q**3 * r * r):
        problems.append("asserted n != q^3 r^2")
    if not any(
        _field(item["n"]) == n and item["provenance"] == data["provenance"] for item in ctx.oracle_assertions
    ):
        problems.append("assertion missing from oracle_assertions")
    if not data["provenance"]:
        problems.append("empty provenance")
    return problems


def _check_positive_rank_witness(data: dict[str, Any], ctx: _Context) -> list[str]:
    a, b, r = ctx.need("a", "b", "r")
    problems: list[str] = []
    if _field(data["a"]) != a or _field(data["b"]) != b or _eis(data["r"]) != r:
        problems.append("a, b or r differ from earlier steps")
    n_raw = FieldElem.of(r * r) * a * a * b * b
    if _field(data["n_raw"]) != n_raw:
        problems.append("n_raw != r^2 a^2 b^2")
    raw_point = _point(data["raw_point"])
    if raw_point != CurvePoint(a, a * (1 - r * b)) or not satisfies(n_raw, raw_point):
        problems.append("raw point is not (a, a(1 - rb)) on the raw curve")

    n = _eis(data["curve"]["n"])
    scaling = _field(data["curve"]["scaling"])
    curve = CurveModel(n=n, scaling=scaling)
    if scaling.is_zero() or FieldElem.of(n) != n_raw * scaling**6:
        problems.append("integral model is not n_raw scaled by a sixth power")
        return problems
    point = _point(data["point"])
    if point.is_infinity or point != CurvePoint(raw_point.x * scaling**2, raw_point.y * scaling**3):
        problems.append("point is not the scaled raw point")
    if not satisfies(curve.n_field, point):
        problems.append("point is off the integral model")
        return problems

    torsion = data["certificate"]["torsion_bound"]
    orders: list[int] = []
    characteristics: set[int] = set()
    for witness in torsion["witnesses"]:
        prime = prime_elem(_eis(witness["prime"]))
        order = int(witness["order"])
        if prime.characteristic in (2, 3) or divides(prime.value, n):
            problems.append(f"witness {prime} is a bad prime")
            continue
        if count_points(curve, prime) != order:
            problems.append(f"point count at {prime} is wrong")
        orders.append(order)
        characteristics.add(prime.characteristic)
    bound = int(torsion["bound"])
    if len(characteristics) < 2:
        problems.append("torsion witnesses span fewer than two characteristics")
    expected_bound = 0
    for order in orders:
        expected_bound = gcd(expected_bound, order)
    if bound != expected_bound or bound < 1:
        problems.append("torsion bound is not the gcd of the witness counts")
    elif scalar_mul(curve, bound, point).is_infinity:
        problems.append("[B]P is the point at infinity")
    if data["certificate"]["status"] != "verified":
        problems.append("witness certificate is not verified")
    return problems


_CHECKERS: dict[str, Callable[[dict[str, Any], _Context], list[str]]] = {
    "quadratic_extension": _check_quadratic_extension,
    "sigma_sets": _check_sigma_sets,
    "congruence_system": _check_congruence_system,
    "prime_triple": _check_prime_triple,
    "twist_parameters": _check_twist_parameters,
    "local_conditions": _check_local_conditions,
    "rank_zero_input": _check_rank_zero_input,
    "positive_rank_witness": _check_positive_rank_witness,
}


def _check_step(step: Any, ctx: _Context) -> StepCheck:
    problems: list[str] = []
    if step.name not in STEP_ANCHORS:
        return StepCheck(step.name, step.status, False, ("unknown step",))
    if step.anchor != STEP_ANCHORS[step.name]:
        problems.append("anchor does not match the step")
    expected_status = "asserted" if step.name == ORACLE_STEP else "verified"
    if step.status == "failed":
        if not step.diagnostics:
            problems.append("failed step without diagnostics")
        return StepCheck(step.name, step.status, not problems, tuple(problems))
    if step.status != expected_status:
        problems.append(f"status must be {expected_status} or failed")
    try:
        problems.extend(_CHECKERS[step.name](step.data, ctx))
    except _Dependency as exc:
        problems.append(f"depends on an unverified step ({exc})")
    except (KeyError, TypeError, ValueError, AttributeError, EisensteinError, CurveError, SelmerLocalError) as exc:
        problems.append(f"malformed data: {exc}")
    return StepCheck(step.name, step.status, not problems, tuple(problems))


def verify_certificate(payload: dict[str, Any] | CertificateDoc) -> VerificationReport:
    """Re-check every recorded step from its embedded data; nothing is searched again."""
    if isinstance(payload, CertificateDoc):
        doc = payload
        raw = doc.model_dump()
    else:
        doc = parse_certificate(payload)
        raw = payload

    problems: list[str] = []
    body = {key: value for key, value in raw.items() if key != "digest"}
    if body_digest(body) != doc.digest:
        problems.append("integrity: digest does not match the certificate body")

    names = [step.name for step in doc.steps]
    if tuple(names) != STEP_NAMES[: len(names)]:
        problems.append("steps are out of order")
    ctx = _Context(
        inputs=doc.inputs.model_dump(),
        oracle_assertions=[assertion.model_dump() for assertion in doc.oracle_assertions],
    )
    checks = tuple(_check_step(step, ctx) for step in doc.steps)

    recomputed = [check.recorded_status if check.ok else "failed" for check in checks]
    if len(checks) < len(STEP_NAMES) and "failed" not in recomputed:
        problems.append("certificate stops before the last step without a failed step")
    status = conclusion_status(recomputed, len(doc.oracle_assertions))
    if status != doc.conclusion.status:
        problems.append(f"conclusion status should be {status}")
    witness = next((check for check in checks if check.name == "positive_rank_witness"), None)
    positive = "verified" if witness is not None and witness.ok and witness.recorded_status == "verified" else "failed"
    if [sub.status for sub in doc.conclusion.sub_statements] != [positive]:
        problems.append(f"positive-rank sub-statement should be {positive}")
    if ORACLE_STEP in names and not doc.oracle_assertions:
        problems.append(f"rank-0 input must be listed, with provenance '{ABSENT_PROVENANCE}' when absent")
    return VerificationReport(
        recorded_status=doc.conclusion.status,
        recomputed_status=status,
        checks=checks,
        problems=tuple(problems),
    )


def verify_certificate_file(path: str | Path) -> VerificationReport:
    return verify_certificate(load_certificate(path))


def first_problem(report: VerificationReport) -> Optional[str]:
    for check in report.checks:
        if check.problems:
            return f"{check.name}: {check.problems[0]}"
    return report.problems[0] if report.problems else None

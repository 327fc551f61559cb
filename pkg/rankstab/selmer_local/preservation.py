from __future__ import annotations

from typing import Iterable

from rankstab.curve import curve_from_n, has_good_reduction
from rankstab.eisenstein import RAMIFIED_PRIME, TWO, EisInt, FieldElem, PrimeElem, factor, is_local_power
from rankstab.quad_ext import QuadExt, SigmaSets, sigma_unit_offenders, splitting_type

from .errors import SelmerPreconditionError
from .models import BlanketCoverage, LocalConditionReport, PreservationCertificate
from .silence import is_silent

CONCLUSION = "local conditions coincide at every prime"
BLANKET_STATEMENT = (
    "every prime outside the listed support is prime to 6 and has v_p(n_base) = v_p(n_twisted) = 0, "
    "so both models have good reduction there and the local conditions agree"
)


def _support(x: FieldElem, hints: tuple[PrimeElem, ...]) -> list[PrimeElem]:
    primes: list[PrimeElem] = []
    for part in (x.num, x.den):
        if not part.is_unit():
            primes.extend(factor(part, hints).support)
    return primes


def _relevant_support(
    sigma: SigmaSets,
    r: EisInt,
    t: FieldElem,
    hints: tuple[PrimeElem, ...],
) -> list[PrimeElem]:
    seen: dict[EisInt, PrimeElem] = {}
    candidates = [RAMIFIED_PRIME, TWO, *sigma.S_prime_superset, *_support(FieldElem.of(r), hints), *_support(t, hints)]
    for prime in candidates:
        seen.setdefault(prime.value, prime)
    return sorted(seen.values(), key=lambda prime: prime.sort_key)


def _report(
    ext: QuadExt,
    sigma: SigmaSets,
    prime: PrimeElem,
    t: FieldElem,
    n_base: FieldElem,
    n_twisted: FieldElem,
    hints: tuple[PrimeElem, ...],
) -> LocalConditionReport:
    if sigma.contains(prime):
        checks = (("t is a local cube", is_local_power(t, prime, 3)),)
        return LocalConditionReport(prime, "in_S_isomorphic", checks, n_base, n_twisted)

    not_over_3 = prime.value != RAMIFIED_PRIME.value
    if not_over_3 and splitting_type(ext, prime) in ("inert", "ramified"):
        checks = (
            ("n non-square locally", is_silent(n_base, prime)),
            ("twisted n non-square locally", is_silent(n_twisted, prime)),
            ("prime does not divide 3", not_over_3),
        )
        return LocalConditionReport(prime, "silent", checks, n_base, n_twisted)

    checks = (
        ("prime does not divide 3", not_over_3),
        ("good reduction for n", has_good_reduction(curve_from_n(n_base, hints), prime)),
        ("good reduction for twisted n", has_good_reduction(curve_from_n(n_twisted, hints), prime)),
    )
    return LocalConditionReport(prime, "good_unramified", checks, n_base, n_twisted)


def _blanket(
    listed: list[PrimeElem],
    n_base: FieldElem,
    n_twisted: FieldElem,
    hints: tuple[PrimeElem, ...],
) -> BlanketCoverage:
    listed_values = {prime.value for prime in listed}
    rederived = _support(n_base, hints) + _support(n_twisted, hints)
    checks = (
        ("primes over 6 are listed", RAMIFIED_PRIME.value in listed_values and TWO.value in listed_values),
        ("support of n and twisted n is listed", all(prime.value in listed_values for prime in rederived)),
    )
    return BlanketCoverage(BLANKET_STATEMENT, tuple(listed), checks)


def preservation_report(
    ext: QuadExt,
    sigma: SigmaSets,
    r: EisInt | int,
    t: FieldElem | EisInt | int,
    hints: Iterable[PrimeElem] = (),
) -> PreservationCertificate:
    """Per-prime comparison of the local conditions for n = q^3 r^2 and its twist by t^2."""
    r = EisInt.coerce(r)
    t = FieldElem.coerce(t)
    hints = tuple(hints)
    if t.is_zero():
        raise SelmerPreconditionError("t must be nonzero.")
    offenders = sigma_unit_offenders(sigma, t, hints)
    if offenders:
        raise SelmerPreconditionError(
            "t is not a Sigma-unit.",
            context=", ".join(str(prime) for prime in offenders),
        )

    n_base = FieldElem.of(ext.q**3 * r * r)
    n_twisted = n_base * t * t
    listed = _relevant_support(sigma, r, t, hints)
    reports = tuple(_report(ext, sigma, prime, t, n_base, n_twisted, hints) for prime in listed)
    return PreservationCertificate(
        q=ext.q,
        r=r,
        t=t,
        n_base=n_base,
        n_twisted=n_twisted,
        reports=reports,
        blanket=_blanket(listed, n_base, n_twisted, hints),
        conclusion=CONCLUSION,
    )

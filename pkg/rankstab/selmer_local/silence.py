from __future__ import annotations

from typing import Optional

from rankstab.curve import CurveModel, ReducedCurve, has_good_reduction
from rankstab.eisenstein import EisInt, FieldElem, PrimeElem, is_local_power

from .errors import SelmerPreconditionError
from .models import SelmerLocalConfig


def is_silent(n: FieldElem | EisInt | int, prime: PrimeElem) -> bool:
    """True iff n is not a square in the completion at prime (prime must not lie over 3)."""
    if prime.kind == "ramified":
        raise SelmerPreconditionError("Silence is only defined away from 1-w.", context=str(prime))
    return not is_local_power(n, prime, 2)


def verify_silence_bruteforce(
    n: EisInt | int,
    prime: PrimeElem,
    config: Optional[SelmerLocalConfig] = None,
) -> Optional[bool]:
    """Enumerate the reduction and check phi and its dual are bijective; None when the prime is too large."""
    cfg = config or SelmerLocalConfig()
    n = EisInt.coerce(n)
    if n.is_zero() or not has_good_reduction(CurveModel(n=n, scaling=FieldElem.of(1)), prime):
        raise SelmerPreconditionError("Brute force needs a prime of good reduction.", context=f"{prime} for n={n}")
    if not is_silent(n, prime):
        raise SelmerPreconditionError("n is a local square; the prime is not silent.", context=f"{prime} for n={n}")
    if prime.norm > cfg.bruteforce_max_norm:
        return None

    reduced = ReducedCurve(n, prime)
    points = reduced.points()
    for isogeny in (reduced.phi, reduced.phi_dual):
        images = {isogeny(point) for point in points}
        kernel = [point for point in points if not point.is_infinity and isogeny(point).is_infinity]
        if kernel or len(images) != len(points):
            return False
    return True

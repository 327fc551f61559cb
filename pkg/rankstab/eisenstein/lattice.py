from __future__ import annotations

import math
from typing import Iterator, Optional

from .arithmetic import normalize
from .errors import EisensteinDomainError
from .models import EisInt

_FIRST_SHELL_FACTOR = 4


def coset_points(
    residue: EisInt | int,
    modulus: EisInt | int,
    norm_bound: Optional[int] = None,
) -> Iterator[EisInt]:
    """Yield every x = residue mod modulus with N(x) <= norm_bound, ordered by (norm, a, b)."""
    modulus = normalize(modulus)
    if modulus.is_zero():
        raise EisensteinDomainError("Coset enumeration needs a nonzero modulus.")
    residue = EisInt.coerce(residue) % modulus
    modulus_norm = modulus.norm

    # residue/modulus in w-coordinates
    scaled = residue * modulus.conjugate()
    center_a = -scaled.a / modulus_norm
    center_b = -scaled.b / modulus_norm

    lower = -1
    upper = _FIRST_SHELL_FACTOR * modulus_norm
    while norm_bound is None or lower < norm_bound:
        if norm_bound is not None:
            upper = min(upper, norm_bound)
        shell = [
            x
            for x in _points_within(residue, modulus, center_a, center_b, upper / modulus_norm)
            if lower < x.norm <= upper
        ]
        shell.sort(key=lambda x: x.sort_key)
        yield from shell
        lower = upper
        upper *= 4


def lattice_points(norm_bound: int) -> Iterator[EisInt]:
    return coset_points(0, 1, norm_bound)


def _points_within(
    residue: EisInt,
    modulus: EisInt,
    center_a: float,
    center_b: float,
    radius_norm: float,
) -> Iterator[EisInt]:
    # |k - c|^2 = (u_a - u_b/2)^2 + 3 u_b^2 / 4 with u = k - c
    b_reach = math.sqrt(4.0 * radius_norm / 3.0) + 1.0
    for kb in range(math.floor(center_b - b_reach), math.ceil(center_b + b_reach) + 1):
        ub = kb - center_b
        slack = radius_norm - 0.75 * ub * ub
        if slack < -1.0:
            continue
        a_reach = math.sqrt(max(slack, 0.0)) + 1.0
        a_mid = center_a + ub / 2.0
        for ka in range(math.floor(a_mid - a_reach), math.ceil(a_mid + a_reach) + 1):
            yield residue + modulus * EisInt(ka, kb)

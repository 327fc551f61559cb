from .arithmetic import (
    divides,
    eis_sqrt,
    euclid_gcd,
    exact_div,
    extended_gcd,
    inverse_mod,
    is_primary,
    lambda_divides,
    normalize,
    parse_eis,
    strip_prime,
    valuation,
)
from .errors import (
    CrtConflictError,
    EisensteinConfigError,
    EisensteinDomainError,
    EisensteinError,
    EisensteinParseError,
)
from .field import FieldElem
from .lattice import coset_points, lattice_points
from .models import (
    LAMBDA,
    OMEGA,
    OMEGA2,
    ONE,
    PRIME_KINDS,
    UNITS,
    ZERO,
    EisensteinConfig,
    EisInt,
    Factorization,
    PrimeElem,
    ResidueClass,
)
from .primes import RAMIFIED_PRIME, TWO, factor, is_prime_element, prime_elem, primes_over, primes_up_to, split_primes
from .residue import (
    ResidueElem,
    ResidueField,
    crt_solve,
    is_local_power,
    is_power_mod,
    residue_class,
    residue_field,
    residue_symbol,
    residue_system,
    unit_residues,
)

__all__ = [
    "EisInt",
    "FieldElem",
    "PrimeElem",
    "ResidueClass",
    "Factorization",
    "EisensteinConfig",
    "EisensteinError",
    "EisensteinDomainError",
    "EisensteinParseError",
    "EisensteinConfigError",
    "CrtConflictError",
    "ZERO",
    "ONE",
    "OMEGA",
    "OMEGA2",
    "PRIME_KINDS",
    "LAMBDA",
    "UNITS",
    "RAMIFIED_PRIME",
    "TWO",
    "divides",
    "eis_sqrt",
    "euclid_gcd",
    "exact_div",
    "extended_gcd",
    "inverse_mod",
    "is_primary",
    "lambda_divides",
    "normalize",
    "parse_eis",
    "strip_prime",
    "valuation",
    "factor",
    "is_prime_element",
    "prime_elem",
    "primes_over",
    "primes_up_to",
    "split_primes",
    "ResidueField",
    "ResidueElem",
    "residue_field",
    "residue_class",
    "residue_system",
    "unit_residues",
    "is_power_mod",
    "residue_symbol",
    "is_local_power",
    "crt_solve",
    "coset_points",
    "lattice_points",
]

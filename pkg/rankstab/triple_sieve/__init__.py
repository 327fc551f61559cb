from .congruence import (
    MIN_DEPTH,
    build_congruence_system,
    choose_gamma,
    is_compatible,
    targets_are_units,
    trivial_congruence_system,
)
from .errors import (
    CongruenceAssemblyError,
    SieveConfigError,
    SieveError,
    SieveExhaustedError,
    SievePreconditionError,
    TwistParamsInvalidError,
)
from .models import CongruenceSystem, PrimeTriple, SieveConfig, TwistParams
from .params import derive_twist_params, twist_class_key, twist_params_hints
from .sieve import canonical_member, check_triple, default_norm_bound, search_shard, sieve_triples

__all__ = [
    "CongruenceSystem",
    "PrimeTriple",
    "TwistParams",
    "SieveConfig",
    "SieveError",
    "SievePreconditionError",
    "SieveExhaustedError",
    "CongruenceAssemblyError",
    "TwistParamsInvalidError",
    "SieveConfigError",
    "MIN_DEPTH",
    "choose_gamma",
    "build_congruence_system",
    "trivial_congruence_system",
    "targets_are_units",
    "is_compatible",
    "sieve_triples",
    "search_shard",
    "canonical_member",
    "check_triple",
    "default_norm_bound",
    "derive_twist_params",
    "twist_class_key",
    "twist_params_hints",
]

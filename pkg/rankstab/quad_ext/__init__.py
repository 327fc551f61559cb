from .errors import (
    ConicSearchError,
    InertTargetSearchError,
    QuadExtConfigError,
    QuadExtError,
    QuadExtPreconditionError,
    TrivialExtensionError,
    UnsupportedRamificationError,
)
from .extension import SPLITTING_TYPES, build_sigma, make_quad_ext, sigma_unit_offenders, splitting_type
from .field import QuadElem
from .models import ConicSolution, QuadExt, QuadExtConfig, SigmaSets, TargetSystem
from .targets import (
    check_conic_solution,
    conic_solutions,
    conic_solvable_units,
    coset_witnesses,
    inert_modulus,
    inert_residue_targets,
)

__all__ = [
    "QuadExt",
    "SigmaSets",
    "TargetSystem",
    "ConicSolution",
    "QuadExtConfig",
    "QuadElem",
    "QuadExtError",
    "TrivialExtensionError",
    "UnsupportedRamificationError",
    "QuadExtPreconditionError",
    "InertTargetSearchError",
    "ConicSearchError",
    "QuadExtConfigError",
    "SPLITTING_TYPES",
    "make_quad_ext",
    "splitting_type",
    "build_sigma",
    "sigma_unit_offenders",
    "inert_modulus",
    "inert_residue_targets",
    "coset_witnesses",
    "conic_solutions",
    "conic_solvable_units",
    "check_conic_solution",
]

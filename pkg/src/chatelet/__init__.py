"""Chow groups of degree-zero 0-cycles on Chatelet surfaces over Q and its completions.

The surface y^2 - d z^2 = (x - c1)(x - c2)(x - c3) has an elementary abelian
2-group of degree-zero 0-cycle classes at every place of Q; `local_chow`
computes it at one place (with generators inside (Z/2)^3) and `global_chow`
assembles the group over Q from the finitely many places that matter.
"""

from .checks import (
    CASE_FAMILIES,
    CheckReport,
    SuiteResult,
    check_equivariance,
    check_order_agreement,
    check_reciprocity,
    check_square_scaling,
    check_symbol_identities,
    check_symbol_oracle,
    check_truncation_stability,
    random_rational,
    random_surface,
    run_check,
)
from .factorint import FactorizationError, factorize, is_prime
from .globalchow import (
    GlobalReport,
    ReciprocityReport,
    candidate_places,
    global_chow,
    kernel_dimension,
    reciprocity_check,
)
from .local import (
    ContradictionError,
    DegenerateSurfaceError,
    LocalReport,
    NormalizedSurface,
    Subgroup3,
    TRIVIAL_SUBGROUP,
    characteristic_points,
    characteristic_subgroup,
    classify_case,
    local_chow,
    normalize_roots,
    special_fiber_images,
    truncation_bounds,
)
from .norms import (
    ExtKind,
    QuadExtClass,
    chi,
    classify_extension,
    conductor_n,
    norm_char_fn,
    norm_uniformizer,
    stability_modulus,
)
from .padic import (
    INFINITY,
    REAL_PLACE,
    Place,
    PrecisionError,
    hilbert_oracle,
    hilbert_symbol,
    is_local_square,
    is_rational_square,
    legendre,
    require_prime_place,
    square_class_units,
    suggested_oracle_precision,
    unit_residue,
    valuation,
)

__version__ = "0.1.0"

__all__ = [
    "CASE_FAMILIES",
    "CheckReport",
    "ContradictionError",
    "DegenerateSurfaceError",
    "ExtKind",
    "FactorizationError",
    "GlobalReport",
    "INFINITY",
    "LocalReport",
    "NormalizedSurface",
    "Place",
    "PrecisionError",
    "QuadExtClass",
    "REAL_PLACE",
    "ReciprocityReport",
    "Subgroup3",
    "SuiteResult",
    "TRIVIAL_SUBGROUP",
    "candidate_places",
    "characteristic_points",
    "characteristic_subgroup",
    "check_equivariance",
    "check_order_agreement",
    "check_reciprocity",
    "check_square_scaling",
    "check_symbol_identities",
    "check_symbol_oracle",
    "check_truncation_stability",
    "chi",
    "classify_case",
    "classify_extension",
    "conductor_n",
    "factorize",
    "global_chow",
    "hilbert_oracle",
    "hilbert_symbol",
    "is_local_square",
    "is_prime",
    "is_rational_square",
    "kernel_dimension",
    "legendre",
    "local_chow",
    "norm_char_fn",
    "norm_uniformizer",
    "normalize_roots",
    "random_rational",
    "random_surface",
    "reciprocity_check",
    "require_prime_place",
    "run_check",
    "special_fiber_images",
    "square_class_units",
    "stability_modulus",
    "suggested_oracle_precision",
    "truncation_bounds",
    "unit_residue",
    "valuation",
]

"""Exact invariants of quotient surfaces over real quadratic fields.

Layers, bottom up: integer utilities (ntheory), quadratic-form class numbers
(forms), exact field arithmetic and prime splitting (field), zeta values and
cusp resolutions (zeta), elliptic fixed-point machinery (elliptic), Chern
number assembly and the general-type sweep (chern), the tree-centre formalism
(trees), and a deterministic CLI (cli).
"""

from .chern import (
    ChernError,
    ChernReport,
    HypothesisError,
    LinearForm,
    ModeMixError,
    TableRow,
    UniquenessError,
    adjunction_self_intersection,
    c1sq_lower_bound,
    c2_lower_check,
    chern_numbers,
    classify,
    curve_chern_integrality,
    default_discriminants,
    genus_gamma0_rational,
    table_diff,
    theorem_table,
)
from .config import ConfigError, RunConfig, load_config
from .elliptic import (
    ALFixedPoints,
    CompletenessError,
    EllipticClassRep,
    EllipticCounts,
    EllipticError,
    Mat2,
    atkin_lehner_refine,
    bounds_gamma0,
    count_fixed_cosets,
    counts_full_group,
    counts_gamma0_from_reps,
    enumerate_elliptic_reps,
    is_elliptic,
    matrix_order,
    rotation_type,
)
from .field import (
    FieldContext,
    FieldElement,
    PrimeIdealData,
    ResidueField,
    fundamental_unit,
    make_field,
    split_prime,
)
from .forms import h_bound, h_definite, h_narrow_indefinite
from .trees import (
    CenterResult,
    GroupAction,
    TreeGraph,
    sigma_primes,
    tree_center,
    verify_center_invariance,
    verify_equidistance,
)
from .zeta import CuspCycle, cusp_resolution, local_chern_divisor_sum, zeta_minus_one

__version__ = "0.1.0"

__all__ = [
    "ALFixedPoints", "CenterResult", "ChernError", "ChernReport",
    "CompletenessError", "ConfigError", "CuspCycle", "EllipticClassRep",
    "EllipticCounts", "EllipticError", "FieldContext", "FieldElement",
    "GroupAction", "HypothesisError", "LinearForm", "Mat2", "ModeMixError",
    "PrimeIdealData", "ResidueField", "RunConfig", "TableRow", "TreeGraph",
    "UniquenessError", "adjunction_self_intersection", "atkin_lehner_refine",
    "bounds_gamma0", "c1sq_lower_bound", "c2_lower_check", "chern_numbers",
    "classify", "count_fixed_cosets", "counts_full_group",
    "counts_gamma0_from_reps", "curve_chern_integrality",
    "cusp_resolution", "default_discriminants", "enumerate_elliptic_reps",
    "fundamental_unit", "genus_gamma0_rational", "h_bound", "h_definite",
    "h_narrow_indefinite", "is_elliptic", "load_config",
    "local_chern_divisor_sum", "make_field", "matrix_order", "rotation_type",
    "sigma_primes", "split_prime", "table_diff", "theorem_table",
    "tree_center", "verify_center_invariance", "verify_equidistance",
    "zeta_minus_one",
]

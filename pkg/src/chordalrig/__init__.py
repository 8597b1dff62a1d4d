"""Exact certificates of universal and global rigidity for chordal bar
frameworks in general position.

The package works entirely over the rationals: stress matrices are built,
eliminated and checked for positive semidefiniteness without any floating
point, so every verdict is exact.
"""

from .certify import (
    AssertionFailure,
    Certificate,
    CertifyError,
    Hyperplane,
    Infeasible,
    NotACut,
    NotGenericRankProfile,
    PreconditionViolated,
    PsdizeResult,
    Reason,
    Verdict,
    certify_chordal,
    elimination_preserves_zero_pattern,
    hyperplane_through,
    psd_stress_from_gale,
    psdize_stress,
    reflection_counterexample,
    unit_triangular_gale,
)
from .exactmat import (
    ExactMatError,
    LinearSolution,
    Matrix,
    NotSymmetric,
    PsdResult,
    Rational,
    SingularMatrix,
    ZeroPivot,
    determinant,
    gauss_step_sequence,
    gauss_steps,
    has_generic_rank_profile,
    inverse,
    leading_principal_minor,
    null_space_basis,
    psd_check,
    rank,
    solve_linear,
)
from .framework import (
    Framework,
    FrameworkError,
    GaleMatrix,
    StressMatrix,
    StressReport,
    StressWeights,
    extended_config_matrix,
    frameworks_congruent,
    frameworks_equivalent,
    gale_matrix,
    is_general_position,
    is_unit_triangular_gale,
    omega_from_stress,
    psi_from_stress,
    random_general_position_framework,
    stress_from_omega,
    stress_from_psi,
    validate_stress_matrix,
    verify_equilibrium_stress,
)
from .graphs import (
    ChordalityResult,
    Graph,
    GraphError,
    Ordering,
    chordal_connectivity,
    components_after_removal,
    find_chordless_cycle,
    gen_ktree,
    higher_neighbors,
    is_chordal,
    is_peo,
    mcs_order,
    vertex_cut_of_size_at_most,
)

__version__ = "0.1.0"

__all__ = [
    "AssertionFailure",
    "Certificate",
    "CertifyError",
    "ChordalityResult",
    "ExactMatError",
    "Framework",
    "FrameworkError",
    "GaleMatrix",
    "Graph",
    "GraphError",
    "Hyperplane",
    "Infeasible",
    "LinearSolution",
    "Matrix",
    "NotACut",
    "NotGenericRankProfile",
    "NotSymmetric",
    "Ordering",
    "PreconditionViolated",
    "PsdResult",
    "PsdizeResult",
    "Rational",
    "Reason",
    "SingularMatrix",
    "StressMatrix",
    "StressReport",
    "StressWeights",
    "Verdict",
    "ZeroPivot",
    "certify_chordal",
    "chordal_connectivity",
    "components_after_removal",
    "determinant",
    "elimination_preserves_zero_pattern",
    "extended_config_matrix",
    "find_chordless_cycle",
    "frameworks_congruent",
    "frameworks_equivalent",
    "gale_matrix",
    "gauss_step_sequence",
    "gauss_steps",
    "gen_ktree",
    "has_generic_rank_profile",
    "higher_neighbors",
    "hyperplane_through",
    "inverse",
    "is_chordal",
    "is_general_position",
    "is_peo",
    "is_unit_triangular_gale",
    "leading_principal_minor",
    "mcs_order",
    "null_space_basis",
    "omega_from_stress",
    "psd_check",
    "psd_stress_from_gale",
    "psdize_stress",
    "psi_from_stress",
    "random_general_position_framework",
    "rank",
    "reflection_counterexample",
    "solve_linear",
    "stress_from_omega",
    "stress_from_psi",
    "unit_triangular_gale",
    "validate_stress_matrix",
    "verify_equilibrium_stress",
    "vertex_cut_of_size_at_most",
]

"""Hyperbolic geometry of the complex unit ball and truncated Fock-space calculus."""

from ._core import (  # noqa: F401
    BallFunction,
    EnumerationResult,
    ErgodicityReport,
    GroupElement,
    MembershipVerdict,
    MoebiusMap,
    Orbit,
    VanishingProduct,
    __version__,
    blaschke_report,
    coeff_l2,
    comparability_factor,
    creation_matrix,
    default_core_radius,
    dual_action_eval,
    enumerate_elements,
    ergodicity_certificate,
    eval_scalar,
    extremal_distance,
    involution_at,
    op_norm,
    orbit_of_origin,
    popescu_apply,
    pseudo_distance,
    quotient_automorphism_check,
    reduce_dimension,
    row_norm,
    spectral_membership,
    stabilizer_check,
    vanishing_witness,
)

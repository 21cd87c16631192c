"""Exact Neron-Severi lattice models of blown-up surfaces, Zariski
decomposition relative to finite candidate curve sets, and exact lower
bounds on self-intersections of integral curves."""

from .bounds import (
    BoundInputs,
    BoundReport,
    anticanonical_bound,
    blowup_bound,
    blowup_bound_chi_ge1,
    blowup_bound_chi_lt1,
    evaluate_curve,
    family_bound,
    family_bound_terms,
    inputs_for_curve,
    inputs_for_degree,
    pivot_multiple,
    surface_bound,
)
from .enumeration import (
    CurveClassQuery,
    VerificationRun,
    enumerate_classes,
    minus_one_candidates,
    minus_one_classes,
    minus_one_degree_cutoff,
    minus_one_query,
    spot_check_classes,
    verify_bounds,
)
from .lattice import (
    DivisorClass,
    IntersectionForm,
    LatticeError,
    SurfaceModel,
    blow_up,
    custom_surface,
    format_class,
    hirzebruch,
    intersect,
    projective_plane,
    ruled_surface,
    signature,
)
from .riemann_roch import (
    GenusData,
    arithmetic_genus,
    chi_of_divisor,
    genus_data,
    self_intersection_from_chi,
)
from .zariski import (
    CandidateCurveSet,
    DecompositionError,
    InvariantError,
    ZariskiDecomposition,
    is_negative_definite,
    validate_decomposition,
    zariski_brute_force,
    zariski_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "BoundInputs",
    "BoundReport",
    "CandidateCurveSet",
    "CurveClassQuery",
    "DecompositionError",
    "DivisorClass",
    "GenusData",
    "IntersectionForm",
    "InvariantError",
    "LatticeError",
    "SurfaceModel",
    "VerificationRun",
    "ZariskiDecomposition",
    "anticanonical_bound",
    "arithmetic_genus",
    "blow_up",
    "blowup_bound",
    "blowup_bound_chi_ge1",
    "blowup_bound_chi_lt1",
    "chi_of_divisor",
    "custom_surface",
    "enumerate_classes",
    "evaluate_curve",
    "family_bound",
    "family_bound_terms",
    "format_class",
    "genus_data",
    "hirzebruch",
    "inputs_for_curve",
    "inputs_for_degree",
    "intersect",
    "is_negative_definite",
    "minus_one_candidates",
    "minus_one_classes",
    "minus_one_degree_cutoff",
    "minus_one_query",
    "pivot_multiple",
    "projective_plane",
    "ruled_surface",
    "self_intersection_from_chi",
    "signature",
    "spot_check_classes",
    "surface_bound",
    "validate_decomposition",
    "verify_bounds",
    "zariski_brute_force",
    "zariski_decompose",
]

"""Exact point counting, linear-section scans, and estimate verification for
complete intersections in projective space over finite fields."""
from __future__ import annotations

from .bounds import (
    BoundReport,
    EstimateRow,
    VerifyReport,
    VerifyRow,
    bertini_degree,
    betti_b1,
    estimate_suite,
    gl_constant,
    trivial_bounds,
    verify_variety,
    zero_bound,
)
from .ffield import (
    FieldElement,
    FieldSpec,
    enumerate_field,
    field_arith,
    field_inv,
    make_field,
)
from .mpoly import (
    SparsePolynomial,
    VariableGrouping,
    check_homogeneous,
    check_multihomogeneous,
    count_affine_zeros,
    eval_poly,
    format_poly,
    lift_to,
    parse_poly,
    partial_derivative,
    random_multihomogeneous,
    random_polynomial,
)
from .radicals import RootSum
from .sections import (
    HooleyCensus,
    ScanReport,
    ScanWitness,
    SecondMomentResult,
    SectionClass,
    SectionTuple,
    SectionVerdict,
    bertini_scan,
    hooley_condition_census,
    second_moment,
    section_count,
    section_smooth_check,
)
from .space import (
    ProjPoint,
    count_affine,
    count_projective,
    enumerate_affine,
    enumerate_projective,
)
from .variety import (
    PointClassification,
    VarietyDescriptor,
    count_points,
    jacobian_rank_at,
    load_variety,
    parse_variety,
    rational_points,
    rational_singular_points,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "EstimateRow",
    "FieldElement",
    "FieldSpec",
    "HooleyCensus",
    "PointClassification",
    "ProjPoint",
    "RootSum",
    "ScanReport",
    "ScanWitness",
    "SecondMomentResult",
    "SectionClass",
    "SectionTuple",
    "SectionVerdict",
    "SparsePolynomial",
    "VariableGrouping",
    "VarietyDescriptor",
    "VerifyReport",
    "VerifyRow",
    "bertini_degree",
    "bertini_scan",
    "betti_b1",
    "check_homogeneous",
    "check_multihomogeneous",
    "count_affine",
    "count_affine_zeros",
    "count_points",
    "count_projective",
    "enumerate_affine",
    "enumerate_field",
    "enumerate_projective",
    "estimate_suite",
    "eval_poly",
    "field_arith",
    "field_inv",
    "format_poly",
    "gl_constant",
    "hooley_condition_census",
    "jacobian_rank_at",
    "lift_to",
    "load_variety",
    "make_field",
    "parse_poly",
    "parse_variety",
    "partial_derivative",
    "random_multihomogeneous",
    "random_polynomial",
    "rational_points",
    "rational_singular_points",
    "second_moment",
    "section_count",
    "section_smooth_check",
    "trivial_bounds",
    "verify_variety",
    "zero_bound",
]

"""Exact p-adic reduction types and minimal-resultant loci of quadratic
rational maps over Q."""

from .classifier import (
    ProjectivePointFp,
    ReductionType,
    hsia_check,
    multiplier_valuations,
    specialize,
    stratum,
)
from .crucial import (
    ConsistencyReport,
    CrucialReport,
    distinct_fixed_lift,
    find_crucial_on_segment,
    identify_normal_form,
    multiple_fixed_lift,
    predict_xi_distinct_fixed,
    predict_xi_multiple_fixed,
    verify_consistency,
)
from .errors import (
    ConsistencyFailure,
    DegenerateMapError,
    DegenerateMultipliersError,
    DegreeError,
    InternalInvariantError,
    MapSyntaxError,
    NegativeValuationError,
    NonIntegralRadiusError,
    NotNormalFormError,
    QuadberkError,
    SingularMatrixError,
    UnboundedProfileError,
    UnhandledResidueCaseError,
    ZeroConstantError,
    ZeroLeadingError,
)
from .invariants import (
    FixedPointPoly,
    SigmaInvariants,
    fixed_point_poly,
    lambda3_from,
    sigma_invariants,
)
from .padic import (
    INF,
    NewtonPolygon,
    PrimeCtx,
    ResidueElem,
    newton_slopes,
    reduce_residue,
    residue_inverse,
    vp,
)
from .parsing import lift_to_expr, parse_map
from .quadmap import (
    Lift,
    Mobius,
    PLFunction,
    TypeIIPoint,
    conjugate,
    gauss_point,
    minimize_profile,
    normalize,
    ord_res_at,
    ord_res_profile,
    resultant,
    resultant_forms,
)
from .reduction import ResidueClass, ResidueKind, ResidueMap, classify_residue, reduce_at

__all__ = [
    "INF",
    "ConsistencyFailure",
    "ConsistencyReport",
    "CrucialReport",
    "DegenerateMapError",
    "DegenerateMultipliersError",
    "DegreeError",
    "FixedPointPoly",
    "InternalInvariantError",
    "Lift",
    "MapSyntaxError",
    "Mobius",
    "NegativeValuationError",
    "NewtonPolygon",
    "NonIntegralRadiusError",
    "NotNormalFormError",
    "PLFunction",
    "PrimeCtx",
    "ProjectivePointFp",
    "QuadberkError",
    "ReductionType",
    "ResidueClass",
    "ResidueElem",
    "ResidueKind",
    "ResidueMap",
    "SigmaInvariants",
    "SingularMatrixError",
    "TypeIIPoint",
    "UnboundedProfileError",
    "UnhandledResidueCaseError",
    "ZeroConstantError",
    "ZeroLeadingError",
    "classify_residue",
    "conjugate",
    "distinct_fixed_lift",
    "find_crucial_on_segment",
    "fixed_point_poly",
    "gauss_point",
    "hsia_check",
    "identify_normal_form",
    "lambda3_from",
    "lift_to_expr",
    "minimize_profile",
    "multiple_fixed_lift",
    "multiplier_valuations",
    "newton_slopes",
    "normalize",
    "ord_res_at",
    "ord_res_profile",
    "parse_map",
    "predict_xi_distinct_fixed",
    "predict_xi_multiple_fixed",
    "reduce_at",
    "reduce_residue",
    "residue_inverse",
    "resultant",
    "resultant_forms",
    "sigma_invariants",
    "specialize",
    "stratum",
    "verify_consistency",
    "vp",
]

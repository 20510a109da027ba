"""Exact-arithmetic toolkit for class T surface singularities, their
weighted-projective compactified smoothings, and the birational geometry
of the boundary curve."""

from .arith import (
    Rational,
    UniPoly,
    eval_poly,
    ext_gcd,
    hj_evaluate,
    hj_expand,
    mod_inverse,
    multiplicity_profile,
    squarefree_decomposition,
)
from .birational import (
    BlowupModel,
    BlowupSurfaceDescription,
    WPoint,
    blowup_at_R2,
    blowup_description,
    evaluate_pi_chart,
    project_pi,
    roundtrip_check,
    target_plane,
)
from .compactify import (
    CompactificationModel,
    CurveAtInfinity,
    FiberStatus,
    ResolvedModel,
    RootConfig,
    TopologyInvariants,
    WeightEnumeration,
    WeightPair,
    build_cyclic,
    build_rdp,
    enumerate_weights,
    minimal_resolution,
    smoothness_status,
    topology,
)
from .errors import (
    BadInput,
    ClassTError,
    CoefficientCountMismatch,
    ConditionViolated,
    IndeterminateAtR2,
    IndexOutOfRange,
    InvalidIndex,
    NoCommonFactor,
    NonInvertible,
    NotCyclicVariant,
    NotFree,
    NotOnSurface,
    RootsInvalid,
    SmoothPoint,
    WrongDimension,
    ZeroPolynomial,
)
from .quotients import (
    CyclicTDescriptor,
    HJChain,
    QuotientSingularity,
    RDPData,
    RdpDescriptor,
    TriPoly,
    detect_class_T,
    hj_resolution,
    is_equivalent,
    normalize,
    rdp_data,
)
from .tianyau import TianYauReport, check_hypotheses, orbifold_adjunction_residual
from .wps import (
    AffineQuotientChart,
    HypersurfaceClass,
    WeightedProjectiveSpace,
    adjunction_class,
    chart,
    hypersurface_intersection,
    is_well_formed,
    well_formed_reduction,
)

__version__ = "0.1.0"

__all__ = [
    "ClassTError",
    "BadInput",
    "CoefficientCountMismatch",
    "ConditionViolated",
    "IndeterminateAtR2",
    "IndexOutOfRange",
    "InvalidIndex",
    "NoCommonFactor",
    "NonInvertible",
    "NotCyclicVariant",
    "NotFree",
    "NotOnSurface",
    "RootsInvalid",
    "SmoothPoint",
    "WrongDimension",
    "ZeroPolynomial",
    "Rational",
    "UniPoly",
    "eval_poly",
    "ext_gcd",
    "hj_evaluate",
    "hj_expand",
    "mod_inverse",
    "multiplicity_profile",
    "squarefree_decomposition",
    "QuotientSingularity",
    "HJChain",
    "CyclicTDescriptor",
    "RdpDescriptor",
    "RDPData",
    "TriPoly",
    "normalize",
    "is_equivalent",
    "hj_resolution",
    "detect_class_T",
    "rdp_data",
    "WeightedProjectiveSpace",
    "AffineQuotientChart",
    "HypersurfaceClass",
    "is_well_formed",
    "chart",
    "hypersurface_intersection",
    "adjunction_class",
    "well_formed_reduction",
    "RootConfig",
    "CurveAtInfinity",
    "TopologyInvariants",
    "CompactificationModel",
    "ResolvedModel",
    "FiberStatus",
    "WeightPair",
    "WeightEnumeration",
    "enumerate_weights",
    "build_cyclic",
    "build_rdp",
    "smoothness_status",
    "topology",
    "minimal_resolution",
    "TianYauReport",
    "check_hypotheses",
    "orbifold_adjunction_residual",
    "WPoint",
    "BlowupModel",
    "BlowupSurfaceDescription",
    "target_plane",
    "project_pi",
    "blowup_at_R2",
    "evaluate_pi_chart",
    "blowup_description",
    "roundtrip_check",
]

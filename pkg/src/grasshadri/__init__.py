"""Exact positivity invariants of Grassmann bundles over curves."""

from .errors import (
    BelowThetaBound,
    GrasshadriError,
    HypothesisUnavailable,
    InvalidBundle,
    NotAmple,
    NotNormalized,
    RankNotAligned,
    RhoOutOfRange,
    SemistableInput,
    ZetaUnavailable,
)
from .hn import (
    HNData,
    HNPiece,
    LevelSelection,
    SplitBundle,
    Summand,
    check_sc1_hypothesis,
    check_sc2_hypothesis,
    hn_filtration,
    normalize_twist,
    quotient_degree_bounds,
    select_level,
    slope,
    theta_for_rank,
    zeta_if_aligned,
)
from .ns import (
    CurveClass,
    DivisorClass,
    LMCoords,
    SectionCount,
    exterior_power_degrees,
    from_lm,
    h0_estimate,
    is_ample,
    is_nef,
    is_pseff,
    pair,
    prop1_check,
    section_class,
    to_lm,
)
from .oracle import kernel_name, oracle_min_ratio
from .seshadri import (
    SeshadriReport,
    SeshadriValue,
    Stratum,
    analyze_level,
    ruled_surface,
    seshadri_at,
    seshadri_summary,
)

__version__ = "0.1.0"

"""Extremal cross s-union families: exact bounds, operators and exhaustive oracles."""

from crossunion.bounds import (
    binom,
    check_inequality,
    g,
    general_pair_bound,
    katona_f,
    maximal_pairs,
)
from crossunion.compression import CompressionTrace, ShadowGrowth, check_shadow_growth, compress_pair
from crossunion.errors import (
    CrossUnionError,
    EmptyFamilyError,
    FamilyFormatError,
    HypothesisError,
    PreconditionError,
    RangeError,
    ScaleError,
)
from crossunion.family import (
    SetFamily,
    bottom,
    dual,
    is_antichain,
    is_cross_s_union,
    is_cross_t_intersecting,
    is_s_union,
    level,
    top,
)
from crossunion.transforms import (
    is_shifted,
    link_and_delete,
    lower_compress,
    shade,
    shadow,
    shift_families,
    shift_ij,
    upper_compress,
)

__all__ = [
    "CompressionTrace",
    "CrossUnionError",
    "EmptyFamilyError",
    "FamilyFormatError",
    "HypothesisError",
    "PreconditionError",
    "RangeError",
    "ScaleError",
    "SetFamily",
    "ShadowGrowth",
    "binom",
    "bottom",
    "check_inequality",
    "check_shadow_growth",
    "compress_pair",
    "dual",
    "g",
    "general_pair_bound",
    "is_antichain",
    "is_cross_s_union",
    "is_cross_t_intersecting",
    "is_s_union",
    "is_shifted",
    "katona_f",
    "level",
    "link_and_delete",
    "lower_compress",
    "maximal_pairs",
    "shade",
    "shadow",
    "shift_families",
    "shift_ij",
    "top",
    "upper_compress",
]

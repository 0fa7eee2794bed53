"""
Ordered grounds, set families, traces and VC dimension.
"""

from .models import GrowthEstimate, OrderedGround, SauerProfile, SetFamily
from .traces import (
    restrict,
    restrict_mask,
    sauer_bound,
    sauer_profile,
    shattered_masks,
    shattered_sets,
    shatters,
    shatters_mask,
    trace_count,
    vc_dimension,
)
from .growth import estimate_growth_exponent, family_trace_oracle
from .io import format_sfam, load_family, parse_family, parse_family_json, parse_sfam

__all__ = [
    'OrderedGround', 'SetFamily', 'SauerProfile', 'GrowthEstimate',
    'restrict', 'restrict_mask', 'shatters', 'shatters_mask', 'shattered_sets',
    'shattered_masks', 'trace_count', 'vc_dimension', 'sauer_bound', 'sauer_profile',
    'estimate_growth_exponent', 'family_trace_oracle',
    'parse_sfam', 'parse_family_json', 'parse_family', 'format_sfam', 'load_family',
]

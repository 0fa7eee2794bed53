"""
Genus of finite unions of convex subsets of the rationals.
"""

from .models import Component, ConvexUnion
from .genus import (
    GenusCode,
    atom_structure,
    boundary_points,
    code_induced,
    convex_union_from_genus,
    genus_oracle,
    genus_scan,
    homeomorphic_traces,
    pattern_avoiding_family,
    pattern_set,
)
from .parse import format_convex_union, parse_convex_union

__all__ = [
    'Component', 'ConvexUnion', 'GenusCode',
    'boundary_points', 'atom_structure', 'genus_scan', 'genus_oracle', 'code_induced',
    'pattern_set', 'convex_union_from_genus', 'pattern_avoiding_family', 'homeomorphic_traces',
    'parse_convex_union', 'format_convex_union',
]

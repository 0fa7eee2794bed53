"""
Ladder dimension, one-inclusion graphs and symmetric-difference stability bounds.
"""

from .models import ClaimReport, LadderWitness, NormalForm, OneInclusionGraph, TightLadderExample
from .ladder import ladder_dimension, ladder_trace_family
from .graph import one_inclusion_graph, verify_distance_law
from .bounds import (
    check_cc,
    check_symdiff_bound,
    check_theorem_tt,
    doubling_ladder_example,
    search_small_normal_form,
    stable_maximum_normal_form,
    symdiff_family,
    symdiff_mask,
    tight_ladder_example,
)

__all__ = [
    'ClaimReport', 'LadderWitness', 'NormalForm', 'OneInclusionGraph', 'TightLadderExample',
    'ladder_dimension', 'ladder_trace_family', 'one_inclusion_graph', 'verify_distance_law',
    'symdiff_family', 'symdiff_mask', 'tight_ladder_example', 'doubling_ladder_example',
    'check_symdiff_bound', 'check_cc', 'check_theorem_tt',
    'stable_maximum_normal_form', 'search_small_normal_form',
]

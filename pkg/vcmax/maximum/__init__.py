"""
Maximum classes: detection, forbidden labels and codes, reconstruction and witnesses.
"""

from .models import Code, ForbiddenLabelTable, MaximumVerdict, PascalSplit, WitnessResult, all_codes
from .codes import induces_pattern, is_subsequence, mask_induces
from .maximum import (
    forbidden_codes,
    forbidden_label,
    forbidden_label_table,
    is_d_maximum,
    is_finitely_characterized,
    maximum_verdict,
    pascal_split,
    reconstruct_from_labels,
    vcm_witness_search,
)
from .io import format_label_table, load_label_table, parse_label_table, parse_label_table_json

__all__ = [
    'Code', 'ForbiddenLabelTable', 'MaximumVerdict', 'PascalSplit', 'WitnessResult', 'all_codes',
    'induces_pattern', 'is_subsequence', 'mask_induces',
    'is_d_maximum', 'maximum_verdict', 'forbidden_label', 'forbidden_label_table',
    'forbidden_codes', 'reconstruct_from_labels', 'is_finitely_characterized',
    'vcm_witness_search', 'pascal_split',
    'parse_label_table', 'parse_label_table_json', 'load_label_table', 'format_label_table',
]

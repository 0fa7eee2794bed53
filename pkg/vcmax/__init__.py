"""
vcmax

Finite set systems seen through maximum VC classes: VC dimension and Sauer
bounds, d-maximum detection with forbidden labels and codes, the genus of
convex unions over the rationals, ladder dimension, one-inclusion graphs and
symmetric-difference stability bounds.
"""

from .errors import (
    ConsistencyError,
    InputError,
    NotMaximumError,
    ParseError,
    PreconditionError,
    SizeCapError,
    VCMaxError,
)

from .config import (
    VCMaxConfig,
    get_config,
    reload_config
)

from .logging import (
    configure_logging,
    get_logger
)

from .sets import (
    OrderedGround,
    SetFamily,
    load_family,
    parse_family,
    restrict,
    sauer_bound,
    sauer_profile,
    shatters,
    vc_dimension
)

from .maximum import (
    Code,
    ForbiddenLabelTable,
    forbidden_codes,
    forbidden_label,
    induces_pattern,
    is_d_maximum,
    is_subsequence,
    reconstruct_from_labels
)

from .genus import (
    ConvexUnion,
    GenusCode,
    genus_oracle,
    genus_scan,
    parse_convex_union,
    pattern_avoiding_family
)

from .stability import (
    check_cc,
    check_symdiff_bound,
    check_theorem_tt,
    ladder_dimension,
    one_inclusion_graph,
    symdiff_family
)

__all__ = [
    # Errors
    'VCMaxError',
    'InputError',
    'ParseError',
    'SizeCapError',
    'PreconditionError',
    'NotMaximumError',
    'ConsistencyError',

    # Configuration and logging
    'VCMaxConfig',
    'get_config',
    'reload_config',
    'configure_logging',
    'get_logger',

    # Set families
    'OrderedGround',
    'SetFamily',
    'load_family',
    'parse_family',
    'restrict',
    'shatters',
    'vc_dimension',
    'sauer_bound',
    'sauer_profile',

    # Maximum classes
    'Code',
    'ForbiddenLabelTable',
    'is_d_maximum',
    'forbidden_label',
    'forbidden_codes',
    'reconstruct_from_labels',
    'induces_pattern',
    'is_subsequence',

    # Genus
    'ConvexUnion',
    'GenusCode',
    'genus_scan',
    'genus_oracle',
    'parse_convex_union',
    'pattern_avoiding_family',

    # Stability
    'ladder_dimension',
    'one_inclusion_graph',
    'symdiff_family',
    'check_symdiff_bound',
    'check_cc',
    'check_theorem_tt'
]

__version__ = "1.0.0"

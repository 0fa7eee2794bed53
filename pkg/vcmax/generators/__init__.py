"""
Example families: interval unions, bounded-size families, random families and
traces of geometric and polynomial positivity sets on point samples.
"""

from .models import PointSample, PolySpec, TraceResult
from .families import (
    bounded_size_family,
    intervals_family,
    power_set_family,
    prefix_family,
    random_convex_union,
    random_family,
    run_count,
    singletons_family,
)
from .geometry import halfplane_traces, linear_traces, planar_traces, polynomial_traces, rectangle_traces
from .io import format_point_sample, parse_point_sample, parse_poly_spec

__all__ = [
    'PointSample', 'PolySpec', 'TraceResult',
    'intervals_family', 'bounded_size_family', 'prefix_family', 'singletons_family',
    'power_set_family', 'random_family', 'random_convex_union', 'run_count',
    'halfplane_traces', 'polynomial_traces', 'rectangle_traces', 'linear_traces', 'planar_traces',
    'parse_point_sample', 'format_point_sample', 'parse_poly_spec',
]

"""
Trace families of positivity sets over point samples, with exact rational arithmetic.

A point a is in pos(p) when p(a) >= 0. For p = u_0 + c_1 u_1 + ... + c_d u_d
each sample point gives an affine constraint in coefficient space; for d <= 2
every cell of the constraint arrangement is visited, boundaries included.
"""

import random
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Sequence, Set, Tuple

from ..config import get_config
from ..errors import InputError, SizeCapError
from ..logging import get_logger
from ..sets.models import SetFamily
from .models import PointSample, PolySpec, TraceResult

logger = get_logger(__name__)

# a constraint (a_1, ..., a_d, b) holds at c when a·c + b >= 0
Constraint = Tuple[Fraction, ...]


def _trace(constraints: Sequence[Constraint], c: Sequence[Fraction]) -> int:
    mask = 0
    for i, con in enumerate(constraints):
        value = con[-1] + sum(a * x for a, x in zip(con[:-1], c))
        if value >= 0:
            mask |= 1 << i
    return mask


def _line_parameters(values: Iterable[Fraction]) -> List[Fraction]:
    """Crossing values, the midpoints between them and one value beyond each end."""
    cuts = sorted(set(values))
    if not cuts:
        return [Fraction(0)]
    mids = [(a + b) / 2 for a, b in zip(cuts, cuts[1:])]
    return cuts + mids + [cuts[0] - 1, cuts[-1] + 1]


def linear_traces(constraints: Sequence[Constraint]) -> Set[int]:
    """All traces for one free coefficient: a c + b >= 0."""
    thresholds = [-con[1] / con[0] for con in constraints if con[0] != 0]
    return {_trace(constraints, (c,)) for c in _line_parameters(thresholds)}


def planar_traces(constraints: Sequence[Constraint]) -> Set[int]:
    """All traces for two free coefficients, by visiting every cell of the line arrangement.

    Every vertex and every edge of the arrangement is sampled, and each edge
    sample is pushed off its line to both sides by less than the distance
    to any other line, which reaches every two-dimensional cell.
    """
    lines = [con for con in constraints if con[0] != 0 or con[1] != 0]
    samples: Set[Tuple[Fraction, Fraction]] = set()
    if not lines:
        samples.add((Fraction(0), Fraction(0)))

    for a1, a2, b in lines:
        norm = a1 * a1 + a2 * a2
        base = (-b * a1 / norm, -b * a2 / norm)
        direction = (-a2, a1)
        crossings = []
        for e1, e2, f in lines:
            den = e1 * direction[0] + e2 * direction[1]
            if den != 0:
                crossings.append(-(e1 * base[0] + e2 * base[1] + f) / den)
        vertex_params = set(crossings)

        for s in _line_parameters(crossings):
            q = (base[0] + s * direction[0], base[1] + s * direction[1])
            samples.add(q)
            if s in vertex_params:
                continue
            step = None
            for e1, e2, f in lines:
                rate = e1 * a1 + e2 * a2
                value = e1 * q[0] + e2 * q[1] + f
                if rate != 0 and value != 0:
                    reach = abs(value / rate)
                    step = reach if step is None else min(step, reach)
            step = Fraction(1) if step is None else step / 2
            samples.add((q[0] + step * a1, q[1] + step * a2))
            samples.add((q[0] - step * a1, q[1] - step * a2))

    return {_trace(constraints, c) for c in samples}


def _check_geometry_cap(what: str, n: int) -> None:
    limit = get_config().caps.exact_geometry
    if n > limit:
        raise SizeCapError(what, n, limit, hint="raise VCMAX_GEOMETRY_CAP")


def halfplane_traces(sample: PointSample) -> TraceResult:
    """Exact traces of pos(1 + c_1 x + c_2 y) over all (c_1, c_2)."""
    if sample.dimension != 2:
        raise InputError(f"halfplane traces need planar points, got dimension {sample.dimension}")
    _check_geometry_cap("halfplane_traces", sample.n)
    constraints = [(x, y, Fraction(1)) for x, y in sample.points]
    degenerate = tuple(label for label, (x, y) in zip(sample.labels, sample.points)
                       if x == 0 and y == 0)
    if degenerate:
        logger.warning("points at the origin are in every trace: %s", ", ".join(degenerate))
    traces = planar_traces(constraints)
    family = SetFamily(sample.ground, tuple(sorted(traces)))
    logger.info("halfplane_traces: n=%d traces=%d", sample.n, len(family))
    return TraceResult(family, "exact", sample.general_position, degenerate)


def polynomial_traces(sample: PointSample, spec: PolySpec, coefficient_grid: Sequence,
                      seed: int = 0, jitter_scale: int = 10 ** 6) -> TraceResult:
    """Traces of pos(u_0 + c_1 u_1 + ... + c_d u_d) on the sample.

    Exact for d <= 2 (arrangement cells). For larger d the coefficient grid is
    scanned and refined along each axis at the exact boundary crossings, with
    seeded jitter on both sides; the result is then a lower bound.
    """
    grid = [Fraction(v) for v in coefficient_grid]
    if not grid:
        raise InputError("the coefficient grid is empty")
    if spec.arity != sample.dimension:
        raise InputError(f"spec has {spec.arity} variables, sample dimension is {sample.dimension}")

    features = [spec.features(p) for p in sample.points]
    constraints = [tuple(f[1:]) + (f[0],) for f in features]
    degenerate = tuple(label for label, f in zip(sample.labels, features)
                       if all(v == 0 for v in f[1:]))
    d = spec.d

    if d <= 2:
        _check_geometry_cap("polynomial_traces", sample.n)
        traces = linear_traces(constraints) if d == 1 else planar_traces(constraints)
        completeness = "exact"
    else:
        # one jitter per (axis, point): a finer grid visits a superset of points
        rng = random.Random(seed)
        jitters = [[Fraction(rng.randint(1, jitter_scale), jitter_scale) for _ in constraints]
                   for _ in range(d)]
        traces = set()
        for c in product(grid, repeat=d):
            traces.add(_trace(constraints, c))
            for axis in range(d):
                for con, jitter in zip(constraints, jitters[axis]):
                    if con[axis] == 0:
                        continue
                    rest = con[-1] + sum(con[k] * c[k] for k in range(d) if k != axis)
                    crossing = -rest / con[axis]
                    for value in (crossing, crossing - jitter, crossing + jitter):
                        point = list(c)
                        point[axis] = value
                        traces.add(_trace(constraints, point))
        completeness = "lower bound"

    family = SetFamily(sample.ground, tuple(sorted(traces)))
    logger.info("polynomial_traces: d=%d n=%d traces=%d (%s)", d, sample.n, len(family), completeness)
    return TraceResult(family, completeness, None, degenerate)


def rectangle_traces(sample: PointSample) -> TraceResult:
    """Exact traces of closed axis-parallel boxes, from boxes spanned by coordinate values, plus ∅."""
    if sample.dimension != 2:
        raise InputError(f"rectangle traces need planar points, got dimension {sample.dimension}")
    _check_geometry_cap("rectangle_traces", sample.n)
    xs = sorted({p[0] for p in sample.points})
    ys = sorted({p[1] for p in sample.points})
    traces = {0}
    for i, xl in enumerate(xs):
        for xr in xs[i:]:
            for j, yl in enumerate(ys):
                for yr in ys[j:]:
                    mask = 0
                    for k, (x, y) in enumerate(sample.points):
                        if xl <= x <= xr and yl <= y <= yr:
                            mask |= 1 << k
                    traces.add(mask)
    return TraceResult(SetFamily(sample.ground, tuple(sorted(traces))), "exact")

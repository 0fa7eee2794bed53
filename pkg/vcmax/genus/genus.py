"""
Genus of convex unions: boundary points, the region scan, the pattern oracle,
the inverse construction and the pattern-avoiding families it characterizes.
"""

from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, List, Optional, Sequence, Tuple

from ..config import resolve_cap
from ..errors import ConsistencyError, SizeCapError
from ..logging import get_logger
from ..maximum.codes import mask_induces
from ..maximum.models import Code, all_codes
from ..sets.models import OrderedGround, SetFamily
from .models import ConvexUnion

# a genus is a code whose length is one more than the number of boundary points
GenusCode = Code

logger = get_logger(__name__)


def boundary_points(union: ConvexUnion) -> List[Fraction]:
    """All finite component endpoints, ascending and deduplicated (punctures included)."""
    points = set()
    for comp in union.components:
        if comp.left is not None:
            points.add(comp.left)
        if comp.right is not None:
            points.add(comp.right)
    return sorted(points)


def _region_samples(points: Sequence[Fraction]) -> List[Fraction]:
    if not points:
        return [Fraction(0)]
    samples = [points[0] - 1]
    samples += [(a + b) / 2 for a, b in zip(points, points[1:])]
    samples.append(points[-1] + 1)
    return samples


def atom_structure(union: ConvexUnion) -> Tuple[List[Fraction], List[bool], List[bool]]:
    """Boundary points with the membership of each open region and each boundary point."""
    points = boundary_points(union)
    region_in = [union.contains(x) for x in _region_samples(points)]
    point_in = [union.contains(p) for p in points]
    return points, region_in, point_in


def genus_scan(union: ConvexUnion) -> GenusCode:
    """Bit i is 0 iff the i-th open region between boundary points lies in the set."""
    _, region_in, _ = atom_structure(union)
    return Code(tuple(0 if inside else 1 for inside in region_in))


def _induces(region_in: Sequence[bool], point_in: Sequence[bool], bits: Sequence[int]) -> bool:
    # a region hosts any run of equal bits, a boundary point hosts one
    m = len(bits)
    j = 0
    for i, region in enumerate(region_in):
        while j < m and bits[j] == int(region):
            j += 1
        if i < len(point_in) and j < m and bits[j] == int(point_in[i]):
            j += 1
    return j == m


def code_induced(union: ConvexUnion, code: Code) -> bool:
    """Are there rationals a_0 < ... < a_{m-1} with a_i in the set exactly when code[i] = 1?"""
    _, region_in, point_in = atom_structure(union)
    return _induces(region_in, point_in, code.bits)


def genus_oracle(union: ConvexUnion) -> GenusCode:
    """The shortest code the set does not induce, found by enumeration.

    Raises:
        ConsistencyError: if the first non-induced length is not d+1 or the
            non-induced code there is not unique.
    """
    points, region_in, point_in = atom_structure(union)
    d = len(points)
    for length in range(1, d + 2):
        missing = [c for c in all_codes(length) if not _induces(region_in, point_in, c.bits)]
        if not missing:
            continue
        if length != d + 1 or len(missing) != 1:
            raise ConsistencyError(
                f"non-induced codes of length {length} are {[str(c) for c in missing]}; "
                f"expected exactly one of length {d + 1}")
        return missing[0]
    raise ConsistencyError(f"every code of length {d + 1} is induced")


def pattern_set(union: ConvexUnion, m: int) -> FrozenSet[Code]:
    """All codes of length m induced by the set."""
    _, region_in, point_in = atom_structure(union)
    return frozenset(c for c in all_codes(m) if _induces(region_in, point_in, c.bits))


def convex_union_from_genus(eta: Code) -> ConvexUnion:
    """A set of genus ``eta`` with boundary points 1..d.

    Region i is inside iff eta[i] = 0. A point between two inside regions is
    excluded, any other point is included.
    """
    d = len(eta) - 1
    region_in = [b == 0 for b in eta.bits]
    point_in = [not (region_in[i] and region_in[i + 1]) for i in range(d)]
    return ConvexUnion.from_regions([Fraction(i) for i in range(1, d + 1)], region_in, point_in)


def pattern_avoiding_family(chain: OrderedGround, eta: Code, cap: Optional[int] = None) -> SetFamily:
    """Every subset of the chain that does not induce ``eta``; a (|eta|-1)-maximum family."""
    limit = resolve_cap(cap)
    n = chain.n
    if n > limit:
        raise SizeCapError("pattern_avoiding_family", n, limit)
    idx = list(range(n))
    bits = eta.bits
    members = tuple(m for m in range(1 << n) if not mask_induces(m, idx, bits))
    logger.debug("pattern_avoiding_family: n=%d eta=%s members=%d", n, eta, len(members))
    return SetFamily(chain, members)


def homeomorphic_traces(union: ConvexUnion, chain: OrderedGround,
                        cap: Optional[int] = None) -> SetFamily:
    """Traces on the chain of all sets with the same boundary pattern as ``union``.

    The boundary points are moved to every strictly increasing placement among
    the chain points and up to d slots in each gap, keeping the membership of
    every region and boundary point.
    """
    limit = resolve_cap(cap)
    n = chain.n
    if n > limit:
        raise SizeCapError("homeomorphic_traces", n, limit)
    points, region_in, point_in = atom_structure(union)
    d = len(points)

    # chain point i sits at key (2i+1, 0); gap g (left of point g) has slots (2g, s)
    candidates = sorted([(2 * g, s) for g in range(n + 1) for s in range(d)]
                        + [(2 * i + 1, 0) for i in range(n)])
    chain_keys = [(2 * i + 1, 0) for i in range(n)]

    traces = set()
    for placement in combinations(candidates, d):
        where = {key: j for j, key in enumerate(placement)}
        mask = 0
        region = 0
        for i, key in enumerate(chain_keys):
            while region < d and placement[region] < key:
                region += 1
            if key in where:
                inside = point_in[where[key]]
            else:
                inside = region_in[region]
            if inside:
                mask |= 1 << i
        traces.add(mask)
    return SetFamily(chain, tuple(sorted(traces)))

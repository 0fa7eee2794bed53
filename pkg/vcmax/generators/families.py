"""
Combinatorial family constructors: interval unions, bounded-size families,
prefixes, random families and random convex unions.
"""

import random
from fractions import Fraction
from typing import Optional

from ..config import resolve_cap
from ..errors import InputError, SizeCapError
from ..genus.models import ConvexUnion
from ..logging import get_logger
from ..sets.models import OrderedGround, SetFamily
from ..utils import masks_of_size

logger = get_logger(__name__)


def _check_cap(what: str, n: int, cap: Optional[int]) -> None:
    limit = resolve_cap(cap)
    if n > limit:
        raise SizeCapError(what, n, limit)


def run_count(mask: int) -> int:
    """Number of maximal runs of consecutive elements."""
    return bin(mask & ~(mask << 1)).count("1")


def intervals_family(chain: OrderedGround, k: int, cap: Optional[int] = None) -> SetFamily:
    """Subsets of the chain that are unions of at most k runs (∅ included); 2k-maximum."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    _check_cap("intervals_family", chain.n, cap)
    members = tuple(m for m in range(1 << chain.n) if run_count(m) <= k)
    logger.debug("intervals_family: n=%d k=%d members=%d", chain.n, k, len(members))
    return SetFamily(chain, members)


def bounded_size_family(ground: OrderedGround, m: int, cap: Optional[int] = None) -> SetFamily:
    """[X]^{<= m}, ordered by size and then lexicographically (∅ first)."""
    if m < 0 or m > ground.n:
        raise InputError(f"need 0 <= m <= n, got m={m} n={ground.n}")
    _check_cap("bounded_size_family", ground.n, cap)
    members = tuple(mask for size in range(m + 1) for mask in masks_of_size(ground.n, size))
    return SetFamily(ground, members)


def prefix_family(chain: OrderedGround) -> SetFamily:
    """The n+1 initial segments of the chain, ∅ through the whole chain."""
    return SetFamily(chain, tuple((1 << j) - 1 for j in range(chain.n + 1)))


def singletons_family(ground: OrderedGround, with_empty: bool = False) -> SetFamily:
    members = ((0,) if with_empty else ()) + tuple(1 << i for i in range(ground.n))
    return SetFamily(ground, members)


def power_set_family(ground: OrderedGround, cap: Optional[int] = None) -> SetFamily:
    _check_cap("power_set_family", ground.n, cap)
    return SetFamily(ground, tuple(range(1 << ground.n)))


def random_family(ground: OrderedGround, count: int, seed: int = 0) -> SetFamily:
    """``count`` distinct subsets drawn uniformly; deterministic under ``seed``."""
    total = 1 << ground.n
    if count < 1:
        raise InputError(f"count must be at least 1, got {count}")
    if count > total:
        raise InputError(f"count {count} exceeds 2^{ground.n} = {total}")
    rng = random.Random(seed)
    return SetFamily(ground, tuple(rng.sample(range(total), count)))


def random_convex_union(rng: random.Random, max_breakpoints: int = 6) -> ConvexUnion:
    """A random convex union with breakpoints at half-integers in [-10, 10]."""
    k = rng.randint(0, max_breakpoints)
    points = sorted(Fraction(v, 2) for v in rng.sample(range(-20, 21), k))
    region_in = [rng.random() < 0.5 for _ in range(k + 1)]
    point_in = [rng.random() < 0.5 for _ in range(k)]
    return ConvexUnion.from_regions(points, region_in, point_in)

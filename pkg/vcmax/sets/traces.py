"""
Traces, shattering, VC dimension and Sauer-bound arithmetic.

Subsets of the ground are handled as bitmasks; the trace of a member on A is
``member & mask(A)``.
"""

import random
from itertools import combinations
from math import comb
from typing import Iterable, List, Optional, Set

from ..config import resolve_cap
from ..errors import InputError, SizeCapError
from ..logging import get_logger
from ..utils import mask_of_positions, popcount, positions, project
from .models import SauerProfile, SetFamily

logger = get_logger(__name__)


def trace_count(family: SetFamily, amask: int) -> int:
    """Number of distinct traces of the family on the subset ``amask``."""
    return len({m & amask for m in family.members})


def restrict_mask(family: SetFamily, amask: int) -> SetFamily:
    """Restriction to the sub-ground given by a mask (first-appearance order)."""
    idx = positions(amask)
    sub = family.ground.sub_ground(amask)
    return SetFamily.normalized(sub, (project(m, idx) for m in family.members))


def restrict(family: SetFamily, subset: Iterable[str]) -> SetFamily:
    """Trace family C|^A on the sub-ground A, in the order induced from the ground.

    Args:
        family: the family C
        subset: labels of A

    Returns:
        The distinct intersections C ∩ A as a family over A.
    """
    return restrict_mask(family, family.ground.mask_of(subset))


def shatters_mask(family: SetFamily, amask: int) -> bool:
    need = 1 << popcount(amask)
    if len(family) < need:
        return False
    return trace_count(family, amask) == need


def shatters(family: SetFamily, subset: Iterable[str]) -> bool:
    """True iff every subset of A is the trace of some member."""
    return shatters_mask(family, family.ground.mask_of(subset))


def _require_nonempty(family: SetFamily) -> None:
    if not family.members:
        raise InputError("the family is empty")


def shattered_masks(family: SetFamily, k: int) -> List[int]:
    """All shattered k-subsets as masks, lexicographic by index tuple."""
    _require_nonempty(family)
    if k < 0:
        raise InputError(f"subset size must be nonnegative, got {k}")
    n = family.n
    return [mask_of_positions(c) for c in combinations(range(n), k)
            if shatters_mask(family, mask_of_positions(c))]


def shattered_sets(family: SetFamily, k: int) -> List[tuple]:
    return [family.ground.labels_of(m) for m in shattered_masks(family, k)]


def vc_dimension(family: SetFamily) -> int:
    """VC dimension by ascending-size search over candidates built from shattered sets.

    A k-set is only tested when all of its (k-1)-subsets are shattered, and
    the search stops at the first size with no shattered set.
    """
    _require_nonempty(family)
    n = family.n
    size_limit = len(family).bit_length() - 1  # 2^k <= |C|
    level: Set[int] = {0}
    d = 0
    for k in range(1, min(n, size_limit) + 1):
        next_level: Set[int] = set()
        for base in level:
            top = base.bit_length()  # extend only above the highest element
            for i in range(top, n):
                cand = base | (1 << i)
                if any((cand & ~(1 << j)) not in level for j in positions(base)):
                    continue
                if shatters_mask(family, cand):
                    next_level.add(cand)
        if not next_level:
            break
        level = next_level
        d = k
    logger.debug("vc_dimension: n=%d |C|=%d d=%d", n, len(family), d)
    return d


def sauer_bound(n: int, d: int) -> int:
    """binom(n, <= d): sum of C(n, i) for i <= d, or 2^n when d >= n."""
    if isinstance(n, bool) or isinstance(d, bool) or not isinstance(n, int) or not isinstance(d, int):
        raise InputError(f"sauer_bound needs integers, got n={n!r} d={d!r}")
    if n < 0 or d < 0:
        raise InputError(f"sauer_bound needs nonnegative arguments, got n={n} d={d}")
    if d >= n:
        return 1 << n
    return sum(comb(n, i) for i in range(d + 1))


def sauer_profile(family: SetFamily, *, sampled: bool = False, samples_per_size: int = 64,
                  seed: int = 0, cap: Optional[int] = None) -> SauerProfile:
    """Maximum trace count over all k-subsets, for k = 0..n, against binom(k, <= d).

    Args:
        family: the family
        sampled: maximize over random k-subsets instead of all of them
        samples_per_size: subsets drawn per size in sampled mode
        seed: seed for sampled mode
        cap: exhaustive limit on n (defaults to the configured cap)

    Returns:
        SauerProfile; ``exact`` is False in sampled mode.
    """
    _require_nonempty(family)
    n = family.n
    limit = resolve_cap(cap)
    if not sampled and n > limit:
        raise SizeCapError("sauer_profile", n, limit, hint="use sampled mode for larger grounds")
    if samples_per_size <= 0:
        raise InputError("samples_per_size must be positive")

    d = vc_dimension(family)
    rng = random.Random(seed)
    counts = []
    for k in range(n + 1):
        if not sampled or comb(n, k) <= samples_per_size:
            masks = (mask_of_positions(c) for c in combinations(range(n), k))
        else:
            masks = (mask_of_positions(rng.sample(range(n), k)) for _ in range(samples_per_size))
        counts.append(max(trace_count(family, m) for m in masks))
    # a k-subset's best trace count is a lower bound for any (k+1)-superset
    for k in range(1, n + 1):
        counts[k] = max(counts[k], counts[k - 1])
    bounds = tuple(sauer_bound(k, d) for k in range(n + 1))
    return SauerProfile(n=n, d=d, counts=tuple(counts), bounds=bounds, exact=not sampled)

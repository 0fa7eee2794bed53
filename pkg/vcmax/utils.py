"""Bitmask helpers shared by the set-system modules."""

from itertools import combinations
from typing import Iterator, List, Sequence


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def positions(mask: int) -> List[int]:
    """Indices of the set bits, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of_positions(indices: Sequence[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def project(mask: int, indices: Sequence[int]) -> int:
    """Compress the bits of ``mask`` at ``indices`` into a dense mask (bit j = indices[j])."""
    out = 0
    for j, i in enumerate(indices):
        if (mask >> i) & 1:
            out |= 1 << j
    return out


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def masks_of_size(n: int, k: int) -> Iterator[int]:
    """k-subsets of range(n) as masks, in lexicographic order of index tuples."""
    for combo in combinations(range(n), k):
        yield mask_of_positions(combo)

"""
Pattern matching between codes and subsets of an ordered ground.
"""

from typing import Iterable, Sequence

from ..sets.models import OrderedGround
from .models import Code


def is_subsequence(eta: Code, mu: Code) -> bool:
    """True iff ``eta`` is a (not necessarily contiguous) subsequence of ``mu``."""
    return matches_prefix(eta.bits, mu.bits) == len(eta)


def matches_prefix(pattern: Sequence[int], word: Iterable[int]) -> int:
    """Length of the longest prefix of ``pattern`` greedily embedded in ``word``."""
    j = 0
    m = len(pattern)
    for bit in word:
        if j == m:
            break
        if bit == pattern[j]:
            j += 1
    return j


def mask_induces(mask: int, indices: Sequence[int], pattern: Sequence[int]) -> bool:
    """Does the subset ``mask`` induce ``pattern`` on the chain of ground ``indices``?"""
    m = len(pattern)
    if m > len(indices):
        return False
    j = 0
    for i in indices:
        if ((mask >> i) & 1) == pattern[j]:
            j += 1
            if j == m:
                return True
    return False


def induces_pattern(ground: OrderedGround, subset: Iterable[str], code: Code) -> bool:
    """True iff some a_0 < ... < a_{m-1} in the ground has a_i in A exactly when code[i] = 1.

    Greedy left-to-right matching; a code longer than the ground is never induced.
    """
    mask = ground.mask_of(subset)
    return mask_induces(mask, range(ground.n), code.bits)

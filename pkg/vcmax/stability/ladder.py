"""
Ladder dimension by exact depth-first search.

A partial ladder x_1..x_k, B_1..B_k is summarized by P = {x_1..x_k} and
U = B_1 ∪ ... ∪ B_k: the next step picks B ⊇ P from the family and a point
x outside U ∪ B. The best continuation depends only on (P, U), so states
are memoized, and the number of points outside U ∪ P bounds what is left.
"""

from typing import Dict, Optional, Tuple

from ..errors import InputError
from ..logging import get_logger
from ..sets.models import OrderedGround, SetFamily
from ..utils import popcount, positions
from .models import LadderWitness

logger = get_logger(__name__)

Choice = Optional[Tuple[int, int]]


def ladder_dimension(family: SetFamily) -> Tuple[int, LadderWitness]:
    """Largest k with x_1..x_k and B_1..B_k in the family such that x_i ∈ B_j iff i < j.

    Returns:
        The ladder dimension and one witness of that length.
    """
    if not family.members:
        raise InputError("ladder dimension of an empty family")
    full = family.ground.full_mask
    members = family.members
    memo: Dict[Tuple[int, int], Tuple[int, Choice]] = {}

    def best(p: int, u: int) -> int:
        key = (p, u)
        if key in memo:
            return memo[key][0]
        free = full & ~(u | p)
        bound = popcount(free)
        length, choice = 0, None
        for b in members:
            if length >= bound:
                break
            if b & p != p:
                continue
            for x in positions(free & ~b):
                got = 1 + best(p | (1 << x), u | b)
                if got > length:
                    length, choice = got, (b, x)
                    if length >= bound:
                        break
        memo[key] = (length, choice)
        return length

    ld = best(0, 0)

    points, sets = [], []
    p, u = 0, 0
    while True:
        _, choice = memo[(p, u)]
        if choice is None:
            break
        b, x = choice
        points.append(family.ground.labels[x])
        sets.append(family.ground.labels_of(b))
        p, u = p | (1 << x), u | b
    logger.debug("ladder_dimension: n=%d |C|=%d ld=%d states=%d", family.n, len(family), ld, len(memo))
    return ld, LadderWitness(tuple(points), tuple(sets))


def ladder_trace_family(witness: LadderWitness) -> SetFamily:
    """Prefix family on the ladder points: the traces {x_1..x_{j-1}} closed with the full point set.

    For a ladder of length k this is a 1-maximum family on k points whose
    first and last members differ in k elements.
    """
    if witness.length == 0:
        raise InputError("an empty ladder has no trace family")
    ground = OrderedGround(witness.points)
    return SetFamily(ground, tuple((1 << j) - 1 for j in range(witness.length + 1)))

"""
d-maximum families: detection, forbidden labels and codes, reconstruction,
finite characterization by a code, and VCm witness search.
"""

import random
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from ..config import get_config, resolve_cap
from ..errors import InputError, NotMaximumError, SizeCapError, truncate_list
from ..logging import get_logger
from ..sets.models import OrderedGround, SetFamily
from ..sets.traces import restrict_mask, sauer_bound, trace_count, vc_dimension
from ..utils import iter_submasks, mask_of_positions, popcount, positions, project
from .codes import mask_induces
from .models import Code, ForbiddenLabelTable, MaximumVerdict, PascalSplit, WitnessResult

logger = get_logger(__name__)


def _check_d(d: int) -> None:
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise InputError(f"d must be a nonnegative integer, got {d!r}")


def _find_violation(family: SetFamily, d: int) -> Optional[Tuple[int, int, int]]:
    """Smallest subset (by size, then lexicographic) whose trace count differs from binom(|A|, <= d)."""
    n = family.n
    for k in range(n + 1):
        expected = sauer_bound(k, d)
        for combo in combinations(range(n), k):
            amask = mask_of_positions(combo)
            count = trace_count(family, amask)
            if count != expected:
                return amask, count, expected
    return None


def is_d_maximum(family: SetFamily, d: int, *, strict: bool = False,
                 cap: Optional[int] = None) -> bool:
    """Is the family d-maximum?

    The fast path uses |C| = binom(n, <= d) together with VC(C) <= d. The
    strict path checks |C|^A| = binom(|A|, <= d) on every subset A.
    """
    _check_d(d)
    if not family.members:
        return False
    if strict:
        limit = resolve_cap(cap)
        if family.n > limit:
            raise SizeCapError("strict maximality check", family.n, limit)
        return _find_violation(family, d) is None
    if len(family) != sauer_bound(family.n, d):
        return False
    return vc_dimension(family) <= d


def maximum_verdict(family: SetFamily, d: int, *, strict: bool = False,
                    cap: Optional[int] = None) -> MaximumVerdict:
    """Maximality check that also names the smallest offending subset when one exists."""
    _check_d(d)
    if not family.members:
        raise InputError("the family is empty")
    n = family.n
    limit = resolve_cap(cap)
    expected = sauer_bound(n, d)
    vc = vc_dimension(family)
    is_max = is_d_maximum(family, d, strict=strict, cap=cap)

    violation = None
    if not is_max and n <= limit:
        violation = _find_violation(family, d)
    elif not is_max:
        logger.info("ground of size %d exceeds cap %d; not naming an offending subset", n, limit)

    if violation is None:
        return MaximumVerdict(is_max, d, "strict" if strict else "fast", len(family), expected, vc)
    amask, count, want = violation
    return MaximumVerdict(
        is_maximum=False,
        d=d,
        mode="strict" if strict else "fast",
        size=len(family),
        expected_size=expected,
        vc=vc,
        violation=family.ground.labels_of(amask),
        violation_count=count,
        violation_expected=want,
    )


def _missing_traces(family: SetFamily, amask: int) -> List[int]:
    present = {m & amask for m in family.members}
    return sorted(s for s in iter_submasks(amask) if s not in present)


def _forbidden_label_mask(family: SetFamily, amask: int) -> int:
    missing = _missing_traces(family, amask)
    if len(missing) != 1:
        raise NotMaximumError(family.ground.labels_of(amask), len(missing))
    return missing[0]


def forbidden_label(family: SetFamily, subset: Iterable[str]) -> Tuple[str, ...]:
    """The unique subset of A that is not a trace of the family on A.

    Args:
        family: a d-maximum family
        subset: a (d+1)-subset A of the ground

    Returns:
        The label as a tuple of ground labels in ground order.

    Raises:
        NotMaximumError: if zero or several traces are missing on A.
    """
    amask = family.ground.mask_of(subset)
    return family.ground.labels_of(_forbidden_label_mask(family, amask))


def forbidden_label_table(family: SetFamily, d: int) -> ForbiddenLabelTable:
    """Forbidden labels of every (d+1)-subset, in lexicographic order of subsets."""
    _check_d(d)
    ground = family.ground
    entries = {}
    for combo in combinations(range(ground.n), d + 1):
        amask = mask_of_positions(combo)
        entries[ground.labels_of(amask)] = ground.labels_of(_forbidden_label_mask(family, amask))
    logger.debug("forbidden_label_table: d=%d entries=%d", d, len(entries))
    return ForbiddenLabelTable(ground, d, entries)


def forbidden_codes(family: SetFamily, d: int) -> frozenset:
    """Codes of all forbidden labels, each read along its subset in ground order."""
    _check_d(d)
    codes = set()
    for combo in combinations(range(family.n), d + 1):
        amask = mask_of_positions(combo)
        label = _forbidden_label_mask(family, amask)
        codes.add(Code(tuple((label >> i) & 1 for i in combo)))
    return frozenset(codes)


def reconstruct_from_labels(table: ForbiddenLabelTable, ground: Optional[OrderedGround] = None,
                            cap: Optional[int] = None) -> SetFamily:
    """All subsets B of the ground with B ∩ A ≠ label(A) for every table entry.

    Raises:
        InputError: when some (d+1)-subset of the ground has no entry.
        SizeCapError: when 2^n candidates exceed the cap.
    """
    ground = ground or table.ground
    limit = resolve_cap(cap)
    if ground.n > limit:
        raise SizeCapError("reconstruct_from_labels", ground.n, limit)

    pairs = []
    for key, label in table.items():
        pairs.append((ground.mask_of(key), ground.mask_of(label)))
    present = {a for a, _ in pairs}
    missing = [ground.labels_of(mask_of_positions(c))
               for c in combinations(range(ground.n), table.d + 1)
               if mask_of_positions(c) not in present]
    if missing:
        raise InputError("incomplete forbidden-label table, missing "
                         + truncate_list("{" + ",".join(m) + "}" for m in missing))

    members = [b for b in range(1 << ground.n) if all((b & a) != lab for a, lab in pairs)]
    logger.debug("reconstruct_from_labels: n=%d d=%d members=%d", ground.n, table.d, len(members))
    return SetFamily(ground, tuple(members))


def is_finitely_characterized(family: SetFamily, eta: Code,
                              probes: Optional[Iterable[Iterable[str]]] = None,
                              cap: Optional[int] = None) -> bool:
    """On every probe X0, are the traces exactly the subsets of X0 not inducing ``eta``?

    Probes default to every subset of the ground, which costs 3^n pattern tests.
    """
    ground = family.ground
    if probes is None:
        limit = resolve_cap(cap)
        if ground.n > limit:
            raise SizeCapError("is_finitely_characterized with all probes", ground.n, limit,
                               hint="pass explicit probes")
        probe_masks: Iterable[int] = range(1 << ground.n)
    else:
        probe_masks = [ground.mask_of(p) for p in probes]

    for x0 in probe_masks:
        idx = positions(x0)
        traces = {m & x0 for m in family.members}
        for a in iter_submasks(x0):
            if (a in traces) == mask_induces(a, idx, eta.bits):
                logger.debug("characterization by %s fails on probe %s at %s",
                             eta, ground.labels_of(x0), ground.labels_of(a))
                return False
    return True


def _is_maximum_on(family: SetFamily, amask: int, d: int) -> bool:
    k = popcount(amask)
    if trace_count(family, amask) != sauer_bound(k, d):
        return False
    return vc_dimension(restrict_mask(family, amask)) <= d


def vcm_witness_search(family: SetFamily, d: int, max_witness: int, *, budget: int = 100_000,
                       seed: int = 0, exhaustive_cap: Optional[int] = None) -> WitnessResult:
    """Search a subset A with restrict(C, A) d-maximum and min(d+1, n) <= |A| <= max_witness.

    Larger witnesses are preferred. Grounds up to the exhaustive cap are
    searched exhaustively from the largest size down; larger grounds use
    seeded random restarts with greedy growth. A negative answer proves
    nonexistence only when ``exhaustive`` is set and the budget was not hit.
    """
    _check_d(d)
    if max_witness < 1:
        raise InputError(f"max_witness must be positive, got {max_witness}")
    if budget <= 0:
        raise InputError("budget must be positive")
    n = family.n
    lo, hi = min(d + 1, n), min(max_witness, n)
    limit = get_config().caps.exhaustive_witness if exhaustive_cap is None else exhaustive_cap
    ground = family.ground
    evaluated = 0

    if hi < lo or not family.members:
        return WitnessResult(False, None, exhaustive=True, evaluated=0)

    if n <= limit:
        for k in range(hi, lo - 1, -1):
            for combo in combinations(range(n), k):
                if evaluated >= budget:
                    return WitnessResult(False, None, exhaustive=False, evaluated=evaluated,
                                         budget_exhausted=True)
                evaluated += 1
                amask = mask_of_positions(combo)
                if _is_maximum_on(family, amask, d):
                    logger.info("vcm witness of size %d after %d evaluations", k, evaluated)
                    return WitnessResult(True, ground.labels_of(amask), exhaustive=True,
                                         evaluated=evaluated)
        return WitnessResult(False, None, exhaustive=True, evaluated=evaluated)

    rng = random.Random(seed)
    best: Optional[int] = None
    while evaluated < budget:
        start = mask_of_positions(rng.sample(range(n), lo))
        evaluated += 1
        if not _is_maximum_on(family, start, d):
            continue
        current = start
        rest = [i for i in range(n) if not (current >> i) & 1]
        rng.shuffle(rest)
        for i in rest:
            if popcount(current) >= hi or evaluated >= budget:
                break
            evaluated += 1
            if _is_maximum_on(family, current | (1 << i), d):
                current |= 1 << i
        if best is None or popcount(current) > popcount(best):
            best = current
        if popcount(best) >= hi:
            break
    found = best is not None
    logger.info("vcm random search: found=%s evaluated=%d", found, evaluated)
    return WitnessResult(found, ground.labels_of(best) if found else None, exhaustive=False,
                         evaluated=evaluated, budget_exhausted=evaluated >= budget)


def pascal_split(family: SetFamily) -> PascalSplit:
    """Split at the top element a: |C| = |reduced| + |tail| for every family."""
    n = family.n
    if n == 0:
        raise InputError("pascal_split needs a nonempty ground")
    top = 1 << (n - 1)
    rest_mask = family.ground.full_mask ^ top
    tail = restrict_mask(family, rest_mask)
    sub_ground = tail.ground
    idx = positions(rest_mask)
    reduced = [project(m, idx) for m in family.members
               if not m & top and (m | top) in family]
    return PascalSplit(
        element=family.ground.labels[n - 1],
        reduced=SetFamily(sub_ground, tuple(reduced)),
        tail=tail,
    )

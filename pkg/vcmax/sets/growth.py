"""
Desk-scale growth estimation: fit the exponent of trace counts against sample size.
"""

import random
from typing import Callable, Sequence

import numpy as np

from ..errors import InputError
from ..logging import get_logger
from ..utils import mask_of_positions
from .models import GrowthEstimate, SetFamily
from .traces import trace_count

logger = get_logger(__name__)

TraceOracle = Callable[[int, random.Random], int]


def _fit(xs: np.ndarray, ys: np.ndarray):
    """Least-squares line through (xs, ys); returns slope, intercept, RMS residual."""
    design = np.vstack([xs, np.ones_like(xs)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, ys, rcond=None)
    residual = float(np.sqrt(np.mean((design @ np.array([slope, intercept]) - ys) ** 2)))
    return float(slope), float(intercept), residual


def estimate_growth_exponent(oracle: TraceOracle, sizes: Sequence[int], seed: int = 0,
                             tolerance: float = 1e-9) -> GrowthEstimate:
    """Estimate the polynomial exponent of an oracle's trace counts.

    Args:
        oracle: called as ``oracle(size, rng)``; returns the number of distinct
            traces on a parameter set of that size
        sizes: ascending sample sizes with at least two distinct values
        seed: seed of the random generator handed to the oracle
        tolerance: slack when comparing the power-law and exponential fits

    Returns:
        GrowthEstimate with the slope of log(count) against log(size). The
        superpolynomial flag is set when log(count) is fit strictly better by
        a line in size than in log(size), with positive growth.
    """
    sizes = [int(s) for s in sizes]
    if len(set(sizes)) < 2:
        raise InputError("growth estimation needs at least two distinct sizes")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InputError(f"sizes must be strictly ascending, got {sizes}")
    if sizes[0] <= 0:
        raise InputError("sizes must be positive")

    rng = random.Random(seed)
    counts = [int(oracle(size, rng)) for size in sizes]
    if any(c <= 0 for c in counts):
        raise InputError(f"trace counts must be positive, got {counts}")

    xs = np.array(sizes, dtype=float)
    ys = np.log(np.array(counts, dtype=float))
    slope, intercept, residual = _fit(np.log(xs), ys)
    exp_slope, _, exp_residual = _fit(xs, ys)

    local = np.diff(ys) / np.diff(np.log(xs))
    suspected = exp_slope > tolerance and exp_residual + tolerance < residual
    logger.info("growth fit: slope=%.4f residual=%.4g exponential residual=%.4g",
                slope, residual, exp_residual)
    return GrowthEstimate(
        sizes=tuple(sizes),
        counts=tuple(counts),
        slope=slope,
        intercept=intercept,
        residual=residual,
        exponential_residual=exp_residual,
        local_slopes=tuple(float(s) for s in local),
        superpolynomial_suspected=bool(suspected),
        seed=seed,
    )


def family_trace_oracle(family: SetFamily) -> TraceOracle:
    """Oracle counting distinct traces of ``family`` on a random subset of each size."""
    n = family.n

    def oracle(size: int, rng: random.Random) -> int:
        if size > n:
            raise InputError(f"sample size {size} exceeds the ground size {n}")
        return trace_count(family, mask_of_positions(rng.sample(range(n), size)))

    return oracle

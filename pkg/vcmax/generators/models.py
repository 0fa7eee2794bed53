"""
Data models for point samples, polynomial specifications and trace results.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Dict, Optional, Sequence, Tuple

from ..errors import InputError
from ..sets.models import OrderedGround, SetFamily

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class PointSample:
    """Distinct rational points of a common dimension, labelled p0, p1, ..."""
    dimension: int
    points: Tuple[Point, ...]
    seed: Optional[int] = None
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.dimension < 1:
            raise InputError(f"dimension must be positive, got {self.dimension}")
        try:
            pts = tuple(tuple(Fraction(v) for v in p) for p in self.points)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InputError(f"point coordinates must be rationals: {e}") from e
        for p in pts:
            if len(p) != self.dimension:
                raise InputError(f"point {p} does not have dimension {self.dimension}")
        if len(set(pts)) != len(pts):
            raise InputError("sample points must be pairwise distinct")
        object.__setattr__(self, "points", pts)
        labels = tuple(self.labels) or tuple(f"p{i}" for i in range(len(pts)))
        if len(labels) != len(pts):
            raise InputError("need one label per point")
        object.__setattr__(self, "labels", labels)

    @classmethod
    def random(cls, dimension: int, count: int, seed: int = 0, bound: int = 50) -> "PointSample":
        """Distinct integer points drawn uniformly from [-bound, bound]^dimension."""
        if count > (2 * bound + 1) ** dimension:
            raise InputError(f"cannot draw {count} distinct points from the box")
        rng = random.Random(seed)
        seen = []
        chosen = set()
        while len(seen) < count:
            p = tuple(rng.randint(-bound, bound) for _ in range(dimension))
            if p not in chosen:
                chosen.add(p)
                seen.append(p)
        return cls(dimension, tuple(seen), seed=seed)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def ground(self) -> OrderedGround:
        return OrderedGround(self.labels)

    @property
    def general_position(self) -> Optional[bool]:
        """For the plane: no three of the points and the origin are collinear."""
        if self.dimension != 2:
            return None
        origin = (Fraction(0), Fraction(0))
        if origin in self.points:
            return False
        pts = self.points + (origin,)
        for a, b, c in combinations(pts, 3):
            if (b[0] - a[0]) * (c[1] - a[1]) == (b[1] - a[1]) * (c[0] - a[0]):
                return False
        return True


@dataclass(frozen=True)
class PolySpec:
    """Monomials u_0, u_1, ..., u_d as exponent tuples; p = u_0 + c_1 u_1 + ... + c_d u_d."""
    monomials: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        mons = tuple(tuple(int(e) for e in m) for m in self.monomials)
        if len(mons) < 2:
            raise InputError("a polynomial spec needs the fixed term and at least one coefficient")
        if len({len(m) for m in mons}) != 1:
            raise InputError("all monomials must have the same number of variables")
        if any(e < 0 for m in mons for e in m):
            raise InputError("exponents must be nonnegative")
        if len(set(mons)) != len(mons):
            raise InputError("monomials must be distinct")
        object.__setattr__(self, "monomials", mons)

    @property
    def d(self) -> int:
        return len(self.monomials) - 1

    @property
    def arity(self) -> int:
        return len(self.monomials[0])

    def features(self, point: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """(u_0(a), u_1(a), ..., u_d(a))."""
        out = []
        for mono in self.monomials:
            value = Fraction(1)
            for coord, exp in zip(point, mono):
                value *= coord ** exp
            out.append(value)
        return tuple(out)


@dataclass
class TraceResult:
    """A trace family with how it was obtained."""
    family: SetFamily
    completeness: str
    general_position: Optional[bool] = None
    degenerate_points: Tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "size": len(self.family),
            "completeness": self.completeness,
            "general_position": self.general_position,
            "degenerate_points": list(self.degenerate_points),
        }

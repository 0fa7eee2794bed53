"""
Finite unions of convex sets over the extended rationals.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from ..errors import InputError

Rational = Fraction


def _as_fraction(value) -> Optional[Fraction]:
    if value is None:
        return None
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InputError(f"not a rational: {value!r}") from e


@dataclass(frozen=True)
class Component:
    """A nonempty convex subset of Q; None stands for -inf on the left and +inf on the right."""
    left: Optional[Fraction]
    right: Optional[Fraction]
    left_closed: bool = False
    right_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "left", _as_fraction(self.left))
        object.__setattr__(self, "right", _as_fraction(self.right))
        if self.left is None and self.left_closed:
            raise InputError("-inf endpoints are always open")
        if self.right is None and self.right_closed:
            raise InputError("+inf endpoints are always open")
        if self.left is not None and self.right is not None:
            if self.left > self.right:
                raise InputError(f"empty component: {self.left} > {self.right}")
            if self.left == self.right and not (self.left_closed and self.right_closed):
                raise InputError(f"degenerate component at {self.left} must be a closed singleton")

    @classmethod
    def point(cls, p) -> "Component":
        return cls(p, p, True, True)

    @property
    def is_singleton(self) -> bool:
        return self.left is not None and self.left == self.right

    def contains(self, x: Fraction) -> bool:
        if self.left is not None and (x < self.left or (x == self.left and not self.left_closed)):
            return False
        if self.right is not None and (x > self.right or (x == self.right and not self.right_closed)):
            return False
        return True


@dataclass(frozen=True)
class ConvexUnion:
    """Ordered, pairwise disjoint, maximal convex components.

    Two neighbours may share an endpoint only when it is excluded from both
    (a punctured point); otherwise their union would be convex.
    """
    components: Tuple[Component, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        for a, b in zip(self.components, self.components[1:]):
            if a.right is None or b.left is None:
                raise InputError("components must be ordered; only the last may reach +inf")
            if a.right > b.left:
                raise InputError(f"components overlap or are out of order near {b.left}")
            if a.right == b.left and (a.right_closed or b.left_closed):
                raise InputError(f"components meeting at {a.right} are not maximal")

    @classmethod
    def empty(cls) -> "ConvexUnion":
        return cls(())

    @classmethod
    def full(cls) -> "ConvexUnion":
        return cls((Component(None, None),))

    @classmethod
    def from_regions(cls, points: Sequence, region_in: Sequence[bool],
                     point_in: Sequence[bool]) -> "ConvexUnion":
        """Build the set whose membership is given on breakpoints and the open regions between them.

        Args:
            points: strictly increasing rationals p_1 < ... < p_k
            region_in: k+1 flags; flag i covers the open region between p_i and p_{i+1}
            point_in: k flags, one per breakpoint

        Returns:
            The ConvexUnion with maximal components.
        """
        pts = [_as_fraction(p) for p in points]
        k = len(pts)
        if len(region_in) != k + 1 or len(point_in) != k:
            raise InputError(f"need {k + 1} region flags and {k} point flags")
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise InputError("breakpoints must be strictly increasing")

        # atoms alternate region 0, point 0, region 1, ..., point k-1, region k
        atoms = []
        for i in range(k):
            atoms.append((bool(region_in[i]), "r", i))
            atoms.append((bool(point_in[i]), "p", i))
        atoms.append((bool(region_in[k]), "r", k))

        def left_end(atom):
            _, kind, i = atom
            if kind == "p":
                return pts[i], True
            return (None, False) if i == 0 else (pts[i - 1], False)

        def right_end(atom):
            _, kind, i = atom
            if kind == "p":
                return pts[i], True
            return (None, False) if i == k else (pts[i], False)

        comps = []
        start = None
        for pos, atom in enumerate(atoms):
            inside = atom[0]
            if inside and start is None:
                start = pos
            if start is not None and (not inside or pos == len(atoms) - 1):
                end = pos if inside else pos - 1
                left, lc = left_end(atoms[start])
                right, rc = right_end(atoms[end])
                comps.append(Component(left, right, lc, rc))
                start = None
        return cls(tuple(comps))

    def __len__(self) -> int:
        return len(self.components)

    def contains(self, x) -> bool:
        x = Fraction(x)
        return any(c.contains(x) for c in self.components)

    def to_dict(self) -> Dict[str, Any]:
        from .parse import format_convex_union
        return {"set": format_convex_union(self), "components": len(self.components)}

"""
Data models for ordered ground sets and set families.
"""

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from ..errors import InputError
from ..utils import positions

_BAD_LABEL = re.compile(r"[\s,:@#{]")


@dataclass(frozen=True)
class OrderedGround:
    """A finite ground set with a fixed linear order (the order of ``labels``)."""
    labels: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        seen = set()
        for label in self.labels:
            if not isinstance(label, str) or not label:
                raise InputError(f"ground labels must be nonempty strings, got {label!r}")
            if _BAD_LABEL.search(label):
                raise InputError(f"ground label {label!r} contains whitespace or one of ',:@#{{'")
            if label in seen:
                raise InputError(f"duplicate ground label {label!r}")
            seen.add(label)

    @classmethod
    def chain(cls, n: int, start: int = 1) -> "OrderedGround":
        """The chain start < start+1 < ... with n integer labels."""
        if n < 0:
            raise InputError(f"chain length must be nonnegative, got {n}")
        return cls(tuple(str(start + i) for i in range(n)))

    @classmethod
    def from_iterable(cls, labels: Iterable[Any]) -> "OrderedGround":
        return cls(tuple(str(label) for label in labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown label {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        """Bitmask of a subset given by labels. Unknown labels raise InputError."""
        mask = 0
        for label in labels:
            mask |= 1 << self.index(str(label))
        return mask

    def labels_of(self, mask: int) -> Tuple[str, ...]:
        return tuple(self.labels[i] for i in positions(mask))

    def word(self, mask: int) -> str:
        """Membership word: character i is '1' iff labels[i] is in the subset."""
        return "".join("1" if (mask >> i) & 1 else "0" for i in range(self.n))

    def mask_from_word(self, word: str) -> int:
        if len(word) != self.n or any(ch not in "01" for ch in word):
            raise InputError(f"malformed membership word {word!r} for a ground of size {self.n}")
        mask = 0
        for i, ch in enumerate(word):
            if ch == "1":
                mask |= 1 << i
        return mask

    def sub_ground(self, mask: int) -> "OrderedGround":
        return OrderedGround(self.labels_of(mask))


@dataclass(frozen=True, eq=False)
class SetFamily:
    """A family of distinct subsets of an ordered ground, stored as bitmasks.

    Bit i of a member is position i of its membership word. Member order is
    kept for presentation; equality ignores it.
    """
    ground: OrderedGround
    members: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        limit = 1 << self.ground.n
        seen = set()
        for m in self.members:
            if not isinstance(m, int) or m < 0 or m >= limit:
                raise InputError(f"member {m!r} is not a subset of a ground of size {self.ground.n}")
            if m in seen:
                raise InputError(f"duplicate member {self.ground.word(m)}")
            seen.add(m)

    @classmethod
    def normalized(cls, ground: OrderedGround, members: Iterable[int]) -> "SetFamily":
        """Build a family, dropping repeated members (first occurrence wins)."""
        return cls(ground, tuple(dict.fromkeys(members)))

    @classmethod
    def from_words(cls, ground: OrderedGround, words: Iterable[str]) -> "SetFamily":
        return cls(ground, tuple(ground.mask_from_word(w) for w in words))

    @classmethod
    def from_label_sets(cls, ground: OrderedGround, sets: Iterable[Iterable[str]],
                        normalize: bool = False) -> "SetFamily":
        masks = [ground.mask_of(s) for s in sets]
        return cls.normalized(ground, masks) if normalize else cls(ground, tuple(masks))

    @property
    def n(self) -> int:
        return self.ground.n

    @cached_property
    def member_set(self) -> FrozenSet[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.member_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground == other.ground and self.member_set == other.member_set

    def __hash__(self) -> int:
        return hash((self.ground, self.member_set))

    def words(self) -> List[str]:
        return [self.ground.word(m) for m in self.members]

    def label_sets(self) -> List[Tuple[str, ...]]:
        return [self.ground.labels_of(m) for m in self.members]

    def sorted(self) -> "SetFamily":
        """Same family with members ordered by size, then lexicographically by positions."""
        key = lambda m: (bin(m).count("1"), positions(m))
        return SetFamily(self.ground, tuple(sorted(self.members, key=key)))

    def to_dict(self) -> Dict[str, Any]:
        return {"ground": list(self.ground.labels), "members": self.words()}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SetFamily":
        try:
            ground = OrderedGround.from_iterable(data["ground"])
            members = data["members"]
        except (KeyError, TypeError) as e:
            raise InputError(f"family JSON needs 'ground' and 'members': {e}") from e
        return cls.from_words(ground, [str(w) for w in members])


@dataclass(frozen=True)
class SauerProfile:
    """Maximum trace counts per subset size against binom(k, <= d)."""
    n: int
    d: int
    counts: Tuple[int, ...]
    bounds: Tuple[int, ...]
    exact: bool = True

    def within_bounds(self) -> bool:
        return all(c <= b for c, b in zip(self.counts, self.bounds))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "d": self.d,
            "exact": self.exact,
            "counts": list(self.counts),
            "bounds": list(self.bounds),
            "within_bounds": self.within_bounds(),
        }


@dataclass(frozen=True)
class GrowthEstimate:
    """Log-log least-squares fit of trace counts against sample sizes."""
    sizes: Tuple[int, ...]
    counts: Tuple[int, ...]
    slope: float
    intercept: float
    residual: float
    exponential_residual: float
    local_slopes: Tuple[float, ...] = field(default_factory=tuple)
    superpolynomial_suspected: bool = False
    seed: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "sizes": list(self.sizes),
            "counts": list(self.counts),
            "slope": round(self.slope, 6),
            "intercept": round(self.intercept, 6),
            "residual": round(self.residual, 6),
            "exponential_residual": round(self.exponential_residual, 6),
            "local_slopes": [round(s, 6) for s in self.local_slopes],
            "superpolynomial_suspected": self.superpolynomial_suspected,
            "seed": self.seed,
        }

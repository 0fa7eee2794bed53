"""
Data models for codes, forbidden-label tables and maximality verdicts.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from ..errors import InputError
from ..sets.models import OrderedGround, SetFamily


@dataclass(frozen=True, order=True)
class Code:
    """A nonempty finite binary sequence, written as a raw 0/1 string."""
    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        if not self.bits:
            raise InputError("a code must be nonempty")
        if any(b not in (0, 1) for b in self.bits):
            raise InputError(f"code bits must be 0 or 1, got {self.bits}")

    @classmethod
    def parse(cls, text: str) -> "Code":
        text = text.strip()
        if not text or any(ch not in "01" for ch in text):
            raise InputError(f"malformed code {text!r}: expected a nonempty 0/1 string")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]


def all_codes(length: int) -> List[Code]:
    """All codes of a given length in lexicographic order."""
    if length <= 0:
        raise InputError(f"code length must be positive, got {length}")
    return [Code(bits) for bits in product((0, 1), repeat=length)]


@dataclass(frozen=True)
class ForbiddenLabelTable:
    """Map from each (d+1)-subset of the ground to its forbidden label."""
    ground: OrderedGround
    d: int
    entries: Dict[Tuple[str, ...], Tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 0:
            raise InputError(f"d must be nonnegative, got {self.d}")
        order = {label: i for i, label in enumerate(self.ground.labels)}
        normalized = {}
        for key, label in self.entries.items():
            key = tuple(key)
            label = tuple(label)
            for x in key + label:
                if x not in order:
                    raise InputError(f"unknown label {x!r} in forbidden-label table")
            if len(set(key)) != self.d + 1:
                raise InputError(f"table key {key} must have exactly {self.d + 1} labels")
            if not set(label) <= set(key):
                raise InputError(f"label {label} is not a subset of its key {key}")
            key = tuple(sorted(key, key=order.__getitem__))
            if key in normalized:
                raise InputError(f"duplicate table key {{{','.join(key)}}}")
            normalized[key] = tuple(sorted(set(label), key=order.__getitem__))
        object.__setattr__(self, "entries", normalized)

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> Iterable[Tuple[Tuple[str, ...], Tuple[str, ...]]]:
        return self.entries.items()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ground": list(self.ground.labels),
            "d": self.d,
            "entries": [{"subset": list(k), "label": list(v)} for k, v in self.entries.items()],
        }


@dataclass(frozen=True)
class MaximumVerdict:
    """Outcome of a d-maximality check, with the smallest offending subset if any."""
    is_maximum: bool
    d: int
    mode: str
    size: int
    expected_size: int
    vc: int
    violation: Optional[Tuple[str, ...]] = None
    violation_count: Optional[int] = None
    violation_expected: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "is_maximum": self.is_maximum,
            "d": self.d,
            "mode": self.mode,
            "size": self.size,
            "expected_size": self.expected_size,
            "vc": self.vc,
        }
        if self.violation is not None:
            out["violation"] = {
                "subset": list(self.violation),
                "traces": self.violation_count,
                "expected": self.violation_expected,
            }
        return out


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    witness: Optional[Tuple[str, ...]]
    exhaustive: bool
    evaluated: int
    budget_exhausted: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "found": self.found,
            "witness": list(self.witness) if self.witness is not None else None,
            "size": len(self.witness) if self.witness is not None else None,
            "exhaustive": self.exhaustive,
            "evaluated": self.evaluated,
            "budget_exhausted": self.budget_exhausted,
        }


@dataclass(frozen=True)
class PascalSplit:
    """Decomposition of a family at its top element a.

    ``reduced`` is the family of traces T on X \\ {a} with both T and T ∪ {a}
    in the family; ``tail`` is the restriction to X \\ {a}.
    """
    element: str
    reduced: SetFamily
    tail: SetFamily

    def to_dict(self) -> Dict[str, Any]:
        return {
            "element": self.element,
            "reduced_size": len(self.reduced),
            "tail_size": len(self.tail),
        }

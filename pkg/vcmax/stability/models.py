"""
Data models for ladders, one-inclusion graphs and claim reports.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from ..errors import InputError
from ..sets.models import SetFamily


@dataclass(frozen=True)
class LadderWitness:
    """Points x_1..x_k and sets B_1..B_k with x_i in B_j exactly when i < j."""
    points: Tuple[str, ...]
    sets: Tuple[Tuple[str, ...], ...]

    def __post_init__(self):
        if len(self.points) != len(self.sets):
            raise InputError("a ladder needs as many sets as points")
        for j, members in enumerate(self.sets):
            present = set(members)
            for i, x in enumerate(self.points):
                if (x in present) != (i < j):
                    raise InputError(f"not a ladder: point {x} vs set {j + 1}")

    @property
    def length(self) -> int:
        return len(self.points)

    def to_dict(self) -> Dict[str, Any]:
        return {"length": self.length, "points": list(self.points),
                "sets": [list(s) for s in self.sets]}


@dataclass
class OneInclusionGraph:
    """Members as vertices, Hamming-1 pairs as edges."""
    family: SetFamily
    graph: nx.Graph
    components: Dict[int, int] = field(default_factory=dict)

    @property
    def edge_count(self) -> int:
        return self.graph.number_of_edges()

    @property
    def component_count(self) -> int:
        return len(set(self.components.values()))

    def is_connected(self) -> bool:
        return self.component_count <= 1

    def distance(self, a: int, b: int) -> Optional[int]:
        """Graph distance between two members, None if disconnected."""
        try:
            return nx.shortest_path_length(self.graph, a, b)
        except nx.NetworkXNoPath:
            return None

    def to_dict(self) -> Dict[str, Any]:
        ground = self.family.ground
        return {
            "vertices": self.graph.number_of_nodes(),
            "edges": self.edge_count,
            "components": self.component_count,
            "connected": self.is_connected(),
            "edge_list": sorted([sorted([ground.word(a), ground.word(b)])
                                 for a, b in self.graph.edges()]),
        }


@dataclass
class ClaimReport:
    """Result of checking a claim on concrete input; failures carry witnesses."""
    claim: str
    passed: bool
    quantities: Dict[str, Any] = field(default_factory=dict)
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    violations: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "claim": self.claim,
            "passed": self.passed,
            "quantities": self.quantities,
            "witnesses": self.witnesses,
            "violations": self.violations,
            "notes": self.notes,
        }


@dataclass
class TightLadderExample:
    """A family and shift set with measured ladder dimensions before and after the shift."""
    name: str
    n: int
    family: SetFamily
    shift: Tuple[str, ...]
    ld: int
    ld_shifted: int
    one_maximum: bool
    matches_claim: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.n,
            "family": self.family.to_dict(),
            "shift": list(self.shift),
            "ld": self.ld,
            "ld_shifted": self.ld_shifted,
            "one_maximum": self.one_maximum,
            "claimed": {"ld": self.n, "ld_shifted": 2 * self.n},
            "matches_claim": self.matches_claim,
        }


@dataclass
class NormalForm:
    """C Δ B ⊆ [X]^{<= m} for a member B; ``least_m`` is the smallest m that works."""
    stable: bool
    m: int
    base: Tuple[str, ...]
    least_m: int
    containment: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "stable": self.stable,
            "m": self.m,
            "base": list(self.base),
            "least_m": self.least_m,
            "containment": self.containment,
        }

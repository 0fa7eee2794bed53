"""
One-inclusion graphs and the Hamming/graph distance law.
"""

from itertools import combinations

import networkx as nx

from ..logging import get_logger
from ..sets.models import SetFamily
from ..utils import popcount
from .models import ClaimReport, OneInclusionGraph

logger = get_logger(__name__)

MAX_LISTED_VIOLATIONS = 20


def one_inclusion_graph(family: SetFamily) -> OneInclusionGraph:
    """Graph on the members joining pairs at Hamming distance exactly 1.

    Components are numbered in order of their first member in the family.
    """
    graph = nx.Graph()
    graph.add_nodes_from(family.members)
    for m in family.members:
        for i in range(family.n):
            other = m ^ (1 << i)
            if other > m and other in family:
                graph.add_edge(m, other, coordinate=family.ground.labels[i])

    order = {m: i for i, m in enumerate(family.members)}
    parts = sorted(nx.connected_components(graph), key=lambda comp: min(order[m] for m in comp))
    components = {m: label for label, comp in enumerate(parts) for m in comp}
    return OneInclusionGraph(family=family, graph=graph, components=components)


def verify_distance_law(family: SetFamily) -> ClaimReport:
    """Compare graph distance with Hamming distance for every pair of members."""
    oig = one_inclusion_graph(family)
    lengths = dict(nx.all_pairs_shortest_path_length(oig.graph))
    ground = family.ground
    violations = []
    max_distance = 0
    for a, b in combinations(family.members, 2):
        hamming = popcount(a ^ b)
        graph_distance = lengths[a].get(b)
        max_distance = max(max_distance, hamming)
        if graph_distance != hamming:
            violations.append({
                "a": ground.word(a),
                "b": ground.word(b),
                "hamming": hamming,
                "graph": "inf" if graph_distance is None else graph_distance,
            })
    if violations:
        logger.info("distance law fails on %d pairs", len(violations))
    return ClaimReport(
        claim="distance-law",
        passed=not violations,
        quantities={
            "pairs": len(family) * (len(family) - 1) // 2,
            "edges": oig.edge_count,
            "components": oig.component_count,
            "max_hamming": max_distance,
            "violation_count": len(violations),
        },
        violations=violations[:MAX_LISTED_VIOLATIONS],
    )

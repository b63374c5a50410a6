"""Minimum spanning trees and the hierarchy-preservation checker.

A spanning connected subgraph of minimum total raw weight carries
exactly the same quasi-flat zone hierarchy as its host graph, and it
is edge-minimal for that property: no edge can be dropped without
either disconnecting it or changing the hierarchy. That equivalence
runs both ways, so hierarchy preservation plus edge-minimality decides
MST-ness without comparing any weights; ``check_mst_via_qfz``
implements that independent decision procedure.
"""

from __future__ import annotations

import numpy as np

from .dsu import DisjointSet
from .errors import DisconnectedGraphError
from .graph import Graph, WeightMap, _check_edge_subset, _frozen
from .hierarchy import hierarchy_equal, qfz


class SpanningSubgraph:
    """Subgraph over the full vertex set, given by an edge subset."""

    __slots__ = ("graph", "edge_indices")

    def __init__(self, graph: Graph, edge_indices):
        self.graph = graph
        self.edge_indices = _frozen(_check_edge_subset(graph, edge_indices))

    @property
    def edge_count(self) -> int:
        return len(self.edge_indices)

    def is_connected(self) -> bool:
        ds = DisjointSet(self.graph.vertex_count)
        pairs = self.graph.edges[self.edge_indices]
        for x, y in pairs.tolist():
            ds.union(x, y)
        return ds.n_sets == 1

    def is_spanning_tree(self) -> bool:
        return self.edge_count == self.graph.vertex_count - 1 and self.is_connected()

    def __repr__(self):
        return f"SpanningSubgraph({self.edge_count} of {self.graph.edge_count} edges)"


def kruskal(graph: Graph, weight_map: WeightMap) -> SpanningSubgraph:
    """Minimum spanning tree by the greedy sweep in rank order.

    Ties break deterministically by edge index, so the result is a
    function of the input alone. Raw weight and rank order agree, so
    minimizing either gives the same trees.
    """
    if len(weight_map) != graph.edge_count:
        raise ValueError("weight map does not match the graph")
    n = graph.vertex_count
    order = np.argsort(weight_map.rank, kind="stable")
    ds = DisjointSet(n)
    chosen = []
    edges = graph.edges
    for u in order.tolist():
        if ds.union(int(edges[u, 0]), int(edges[u, 1])):
            chosen.append(u)
            if len(chosen) == n - 1:
                break
    if len(chosen) != n - 1:
        raise DisconnectedGraphError("graph is not connected")
    return SpanningSubgraph(graph, sorted(chosen))


def total_weight(subgraph: SpanningSubgraph, weight_map: WeightMap) -> float:
    """Sum of raw weights over the subgraph's edges."""
    return float(weight_map.raw[subgraph.edge_indices].sum())


def check_mst_via_qfz(graph: Graph, weight_map: WeightMap, candidate: SpanningSubgraph) -> bool:
    """Decide MST-ness through hierarchy preservation alone.

    True exactly when (a) the candidate induces the same quasi-flat
    zone hierarchy as the full graph and (b) removing any single edge
    either disconnects it or changes that hierarchy. Single deletions
    suffice: a spanning tree cannot lose an edge and stay connected,
    and a non-tree candidate always has a removable cycle edge.

    The candidate must span and be connected; anything else raises.
    """
    if candidate.graph is not graph and candidate.graph != graph:
        raise ValueError("candidate belongs to a different graph")
    if not candidate.is_connected():
        raise DisconnectedGraphError("candidate subgraph must be connected and spanning")
    reference = qfz(graph, weight_map)
    if not hierarchy_equal(qfz(graph, weight_map, candidate.edge_indices), reference):
        return False
    indices = candidate.edge_indices
    for drop in range(len(indices)):
        rest = np.delete(indices, drop)
        if not SpanningSubgraph(graph, rest).is_connected():
            continue
        if hierarchy_equal(qfz(graph, weight_map, rest), reference):
            return False
    return True


# ---------------------------------------------------------------------------
# Text format: one edge index per line, ascending.
# ---------------------------------------------------------------------------

def format_edge_indices(subgraph: SpanningSubgraph) -> str:
    return "".join(f"{int(u)}\n" for u in subgraph.edge_indices)


def parse_edge_indices(graph: Graph, text: str) -> SpanningSubgraph:
    indices = []
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            indices.append(int(body))
    return SpanningSubgraph(graph, indices)

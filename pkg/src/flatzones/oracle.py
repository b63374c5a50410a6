"""Naive reference implementations used as ground truth in tests.

Everything here trades speed for obviousness: components come from
breadth-first search, level partitions are recomputed from scratch for
every level, and spanning trees are enumerated exhaustively. Size
guards raise instead of truncating so none of these can silently stand
in for a scalable code path.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import DisconnectedGraphError
from .graph import Graph, Partition, WeightMap, normalize_weights

SMALL_GRAPH_LIMIT = 10
ENUMERATION_LIMIT = 7


def _guard(graph, limit, what):
    if graph.vertex_count > limit:
        raise ValueError(
            f"{what} is an enumeration oracle, refusing |V|={graph.vertex_count} > {limit}"
        )


def bfs_components(n, edge_pairs) -> Partition:
    """Connected components by breadth-first search (no union-find)."""
    adj = [[] for _ in range(n)]
    for x, y in edge_pairs:
        adj[x].append(y)
        adj[y].append(x)
    labels = [-1] * n
    for start in range(n):
        if labels[start] != -1:
            continue
        labels[start] = start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if labels[u] == -1:
                    labels[u] = start
                    queue.append(u)
    return Partition(labels)


def qfz_naive(graph: Graph, weight_map, edge_subset=None):
    """Level partitions for every level 0..m, each computed literally.

    The level-L partition is the components of the subgraph keeping the
    subset edges whose rank is below L. Accepts a WeightMap (dense
    ranks) or a SaliencyMap (its values are the level scale). Returns
    a list of m+1 Partitions (m = host edge count, regardless of the
    subset).
    """
    from .hierarchy import _level_values

    _guard(graph, SMALL_GRAPH_LIMIT, "qfz_naive")
    if edge_subset is None:
        subset = list(range(graph.edge_count))
    else:
        subset = sorted(int(u) for u in edge_subset)
    rank, _ = _level_values(weight_map, graph.edge_count)
    out = []
    for level in range(graph.edge_count + 1):
        pairs = [tuple(graph.edges[u]) for u in subset if rank[u] < level]
        out.append(bfs_components(graph.vertex_count, pairs))
    if out[-1].region_count != 1:
        raise DisconnectedGraphError("subgraph is not connected; hierarchy incomplete")
    return out


def saliency_naive(graph: Graph, qfz_partitions) -> list[int]:
    """Per-edge saliency by scanning levels from the top.

    The value of an edge is the largest level whose partition still
    separates its endpoints.
    """
    values = []
    for x, y in graph.edges.tolist():
        value = None
        for level in range(len(qfz_partitions) - 1, -1, -1):
            labels = qfz_partitions[level].labels
            if labels[x] != labels[y]:
                value = level
                break
        if value is None:
            raise AssertionError("level-0 partition must separate every edge")
        values.append(value)
    return values


def spanning_tree_enumerate(graph: Graph, weight_map: WeightMap):
    """All spanning trees with their total raw weight.

    Enumerates every edge subset of size |V|-1 and keeps the connected
    ones. Returns a list of (edge_index_tuple, total_weight) pairs in
    lexicographic order of the index tuples.
    """
    _guard(graph, ENUMERATION_LIMIT, "spanning_tree_enumerate")
    n = graph.vertex_count
    raw = weight_map.raw
    trees = []
    for subset in combinations(range(graph.edge_count), n - 1):
        pairs = [tuple(graph.edges[u]) for u in subset]
        if bfs_components(n, pairs).region_count == 1:
            trees.append((subset, float(raw[list(subset)].sum())))
    return trees


def minimality_probe(graph: Graph, saliency_map) -> list[int]:
    """Edges whose unit decrement leaves the hierarchy unchanged.

    The input must already be a saliency map (a fixed point of the
    saliency opening); otherwise ValueError. For a genuine saliency map
    the returned list is empty: lowering any single positive value by
    one changes the induced hierarchy. Zero-valued edges are skipped,
    values cannot go below zero.

    Decrementing by a single unit suffices: any smaller map with the
    same hierarchy sandwiches every intermediate map level-set-wise, so
    the intermediate hierarchies are squeezed into equality as well.
    """
    from .hierarchy import hierarchy_equal, qfz
    from .saliency import SaliencyMap, is_saliency_map

    values = np.asarray(
        saliency_map.values if hasattr(saliency_map, "values") else saliency_map,
        dtype=np.int64,
    )
    sal = SaliencyMap(values)
    if not is_saliency_map(graph, sal):
        raise ValueError("input is not a saliency map; the probe is meaningless")
    base = qfz(graph, sal)
    violators = []
    for u in range(graph.edge_count):
        if values[u] == 0:
            continue
        lowered = values.copy()
        lowered[u] -= 1
        if hierarchy_equal(qfz(graph, SaliencyMap(lowered)), base):
            violators.append(u)
    return violators


@dataclass
class Fixture:
    """A small named graph with raw weights and room for oracle output."""

    name: str
    graph: Graph
    raw_weights: np.ndarray
    artifacts: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.graph.vertex_count > SMALL_GRAPH_LIMIT:
            raise ValueError("fixtures must stay within the enumeration limit")

    @property
    def weight_map(self) -> WeightMap:
        return normalize_weights(self.graph, self.raw_weights)


def standard_fixtures() -> dict[str, Fixture]:
    """The four fixtures used across the test suite.

    single: one edge. path: 0-1-2 chain. triangle: complete graph on 3
    vertices. cycle4: 4-cycle whose raw weights contain a tie, so its
    dense ranks differ from the raws.
    """
    return {
        "single": Fixture("single", Graph(2, [(0, 1)]), np.array([0.0])),
        "path": Fixture("path", Graph(3, [(0, 1), (1, 2)]), np.array([0.0, 1.0])),
        "triangle": Fixture(
            "triangle", Graph(3, [(0, 1), (1, 2), (0, 2)]), np.array([0.0, 1.0, 2.0])
        ),
        "cycle4": Fixture(
            "cycle4",
            Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
            np.array([0.0, 2.0, 0.0, 3.0]),
        ),
    }

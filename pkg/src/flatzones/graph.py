"""Graphs, partitions, and weight normalization.

Vertices are integers 0..n-1. Edges are unordered pairs of distinct
vertices, identified by their position in the edge list; that index is
the identity used by every other module (weight maps, edge subsets,
saliency values are all arrays indexed by edge).

Raw weights are kept alongside a dense integer rank in {0..k-1} with
k <= m. Ranks preserve ties: equal raw weights share a rank. All level
and hierarchy computations depend only on ranks; sums of weights (for
spanning trees) use the raw values.
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _cs_connected_components

from .dsu import DisjointSet
from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    FormatError,
    SelfLoopError,
    VertexRangeError,
    WeightError,
)

# Below this edge count connectivity is checked with the plain
# disjoint-set loop; above it the sparse-matrix routine is cheaper.
_SCIPY_VALIDATION_THRESHOLD = 16384


def _frozen(a):
    a.flags.writeable = False
    return a


class Graph:
    """Connected undirected graph with an indexed edge list.

    Construct through :func:`validate_graph` (or the class constructor,
    which validates). `Graph.unchecked` skips validation and exists only
    for subgraph plumbing and for deliberately disconnected probes in
    tests; everything downstream assumes instances are valid.
    """

    __slots__ = ("vertex_count", "edges", "edge_count")

    def __init__(self, vertex_count, edge_pairs, _validate=True):
        edges = np.asarray(edge_pairs, dtype=np.int64)
        if edges.size == 0:
            edges = edges.reshape(0, 2)
        if edges.ndim != 2 or edges.shape[1] != 2:
            raise VertexRangeError("edge list must be a sequence of vertex pairs")
        self.vertex_count = int(vertex_count)
        self.edges = _frozen(edges)
        self.edge_count = len(edges)
        if _validate:
            self._validate()

    @classmethod
    def unchecked(cls, vertex_count, edge_pairs):
        return cls(vertex_count, edge_pairs, _validate=False)

    def _validate(self):
        n, edges = self.vertex_count, self.edges
        if n <= 0:
            raise VertexRangeError("vertex_count must be positive")
        if len(edges) > 0:
            if edges.min() < 0 or edges.max() >= n:
                raise VertexRangeError("edge endpoint out of range [0, vertex_count)")
            if (edges[:, 0] == edges[:, 1]).any():
                bad = int(np.flatnonzero(edges[:, 0] == edges[:, 1])[0])
                raise SelfLoopError(f"edge {bad} joins vertex {edges[bad, 0]} to itself")
            lo = np.minimum(edges[:, 0], edges[:, 1])
            hi = np.maximum(edges[:, 0], edges[:, 1])
            order = np.lexsort((hi, lo))
            dup = (lo[order][1:] == lo[order][:-1]) & (hi[order][1:] == hi[order][:-1])
            if dup.any():
                i = int(order[1:][dup][0])
                raise DuplicateEdgeError(
                    f"duplicate edge {{{lo[i]},{hi[i]}}} (unordered pairs must be unique)"
                )
        if not self._is_connected():
            raise DisconnectedGraphError("the vertex set is not connected")

    def _is_connected(self):
        n, edges = self.vertex_count, self.edges
        if n == 1:
            return True
        if len(edges) < n - 1:
            return False
        if len(edges) >= _SCIPY_VALIDATION_THRESHOLD:
            m = coo_matrix(
                (np.ones(len(edges), dtype=np.int8), (edges[:, 0], edges[:, 1])),
                shape=(n, n),
            )
            n_comp, _ = _cs_connected_components(m, directed=False)
            return n_comp == 1
        ds = DisjointSet(n)
        for x, y in self.edges.tolist():
            ds.union(x, y)
        return ds.n_sets == 1

    def __repr__(self):
        return f"Graph(|V|={self.vertex_count}, |E|={self.edge_count})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and np.array_equal(
            self.edges, other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges.tobytes()))


def validate_graph(vertex_count, edge_pairs) -> Graph:
    """Build a Graph, rejecting self-loops, duplicates, bad indices, and
    disconnected vertex sets with distinct error types."""
    return Graph(vertex_count, edge_pairs)


class WeightMap:
    """Per-edge weights: raw nonnegative reals plus their dense rank.

    `rank` is order-isomorphic to `raw` (equal raws share a rank, the
    rank values form the prefix {0..k-1}). Level parameters for the
    hierarchy operations live in {0..m}, one past the largest possible
    rank m-1.
    """

    __slots__ = ("raw", "rank", "rank_count")

    def __init__(self, raw, rank, rank_count):
        self.raw = _frozen(np.asarray(raw, dtype=np.float64))
        self.rank = _frozen(np.asarray(rank, dtype=np.int64))
        self.rank_count = int(rank_count)

    def __len__(self):
        return len(self.raw)

    def raw_of_rank(self):
        """Lookup table mapping each present rank to its raw weight."""
        lut = np.zeros(self.rank_count, dtype=np.float64)
        lut[self.rank] = self.raw
        return lut

    def __repr__(self):
        return f"WeightMap(m={len(self.raw)}, distinct={self.rank_count})"


def normalize_weights(graph: Graph, raw_weights) -> WeightMap:
    """Dense-rank the raw weights of a graph's edges.

    Ties are preserved: equal raws map to the same rank, so the rank
    range is {0..k-1} with k the number of distinct values.
    """
    raw = np.asarray(raw_weights, dtype=np.float64)
    if raw.shape != (graph.edge_count,):
        raise WeightError(
            f"expected {graph.edge_count} weights, got shape {raw.shape}"
        )
    if len(raw) and not np.isfinite(raw).all():
        raise WeightError("weights must be finite (no NaN or infinity)")
    if len(raw) and raw.min() < 0:
        raise WeightError("weights must be nonnegative")
    if len(raw) == 0:
        return WeightMap(raw, np.zeros(0, dtype=np.int64), 0)
    distinct, rank = np.unique(raw, return_inverse=True)
    return WeightMap(raw, rank.astype(np.int64), len(distinct))


def _canonical_labels(values):
    """Relabel an arbitrary integer array to 0..r-1 in order of first
    occurrence, so the region containing the smallest vertex gets 0."""
    values = np.asarray(values)
    uniq, first, inverse = np.unique(values, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    remap = np.empty(len(uniq), dtype=np.int64)
    remap[order] = np.arange(len(uniq))
    return remap[inverse], len(uniq)


class Partition:
    """Labeling of vertices into regions.

    Labels are canonical: region ids are dense and ordered by the
    smallest vertex each region contains, which makes equality a plain
    array comparison.
    """

    __slots__ = ("labels", "region_count")

    def __init__(self, labels):
        labels, count = _canonical_labels(labels)
        self.labels = _frozen(labels)
        self.region_count = count

    def region_of(self, x) -> int:
        return int(self.labels[x])

    def regions(self):
        """Regions as a list of sorted vertex lists, in label order."""
        out = [[] for _ in range(self.region_count)]
        for v, lab in enumerate(self.labels.tolist()):
            out[lab].append(v)
        return out

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash(self.labels.tobytes())

    def __repr__(self):
        return f"Partition({self.region_count} regions over {len(self.labels)} vertices)"


def _check_edge_subset(graph, edge_subset):
    idx = np.asarray(edge_subset, dtype=np.int64)
    if idx.size and (idx.min() < 0 or idx.max() >= graph.edge_count):
        raise IndexError("edge index out of range for this graph")
    return np.unique(idx)


def edge_set(graph: Graph, edge_indices) -> np.ndarray:
    """Normalize a collection of edge indices to a sorted unique array.

    This is the carrier for level sets, cuts, and spanning subgraphs;
    edge subsets elsewhere accept anything this function accepts.
    """
    return _frozen(_check_edge_subset(graph, edge_indices))


def connected_components(graph: Graph, edge_subset=None) -> Partition:
    """Partition of the vertices into the connected components of
    (V, edge_subset), defaulting to the full edge set."""
    n = graph.vertex_count
    if edge_subset is None:
        pairs = graph.edges
    else:
        pairs = graph.edges[_check_edge_subset(graph, edge_subset)]
    ds = DisjointSet(n)
    for x, y in pairs.tolist():
        ds.union(x, y)
    return Partition(ds.roots())


def refines(fine: Partition, coarse: Partition) -> bool:
    """True when every region of `fine` lies inside a region of `coarse`."""
    if len(fine) != len(coarse):
        raise ValueError("partitions cover different vertex counts")
    pairs = np.unique(
        np.stack([fine.labels, coarse.labels], axis=1), axis=0
    )
    return len(np.unique(pairs[:, 0])) == len(pairs)


def cut(partition: Partition, graph: Graph) -> np.ndarray:
    """Edge indices whose endpoints lie in different regions."""
    if len(partition) != graph.vertex_count:
        raise ValueError("partition does not cover this graph's vertex set")
    labels = partition.labels
    mask = labels[graph.edges[:, 0]] != labels[graph.edges[:, 1]]
    return _frozen(np.flatnonzero(mask))


# ---------------------------------------------------------------------------
# Text format: line 1 "n m", then one "x y w" line per edge; '#' starts a
# comment. Edge index = order of edge lines.
# ---------------------------------------------------------------------------

def _strip_comments(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def parse_graph_text(text: str):
    """Parse the graph text format into (Graph, WeightMap)."""
    lines = _strip_comments(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise FormatError("empty graph file") from None
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"line {lineno}: header must be two integers") from None
    pairs = np.empty((m, 2), dtype=np.int64)
    weights = np.empty(m, dtype=np.float64)
    count = 0
    for lineno, body in lines:
        if count >= m:
            raise FormatError(f"line {lineno}: more than {m} edge lines")
        fields = body.split()
        if len(fields) != 3:
            raise FormatError(f"line {lineno}: expected 'x y w'")
        try:
            pairs[count, 0] = int(fields[0])
            pairs[count, 1] = int(fields[1])
            weights[count] = float(fields[2])
        except ValueError:
            raise FormatError(f"line {lineno}: malformed edge line {body!r}") from None
        count += 1
    if count != m:
        raise FormatError(f"expected {m} edge lines, found {count}")
    graph = validate_graph(n, pairs)
    return graph, normalize_weights(graph, weights)


def format_weight(value) -> str:
    """Decimal form of a weight; integers print without a fraction."""
    f = float(value)
    if f == int(f):
        return str(int(f))
    return repr(f)


def format_graph_text(graph: Graph, weights) -> str:
    """Render a graph and per-edge values in the text format.

    `weights` may be a WeightMap (raw values are written) or any
    per-edge numeric array, e.g. saliency values.
    """
    values = weights.raw if isinstance(weights, WeightMap) else np.asarray(weights)
    if len(values) != graph.edge_count:
        raise ValueError("one value per edge required")
    out = [f"{graph.vertex_count} {graph.edge_count}"]
    for (x, y), w in zip(graph.edges.tolist(), values.tolist()):
        out.append(f"{x} {y} {format_weight(w)}")
    return "\n".join(out) + "\n"

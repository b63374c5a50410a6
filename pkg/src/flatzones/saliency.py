"""Saliency maps of hierarchies and the saliency opening on weights.

The saliency value of an edge {x,y} under a hierarchy is the largest
level whose partition separates x from y; equivalently, the level of
the least common ancestor of the two leaves in the dendrogram, minus
one. Computing the map therefore reduces to per-edge LCA level
queries.

Everything rests on one reduction: in depth-first leaf order, the
level (equivalently, tour depth) at which two leaves merge is the
extremal break level between their positions, so LCA queries become
range extremum queries. ``LCAIndex`` answers point queries in O(1)
through a blocked range structure and also carries the underlying
Euler tour for inspection; ``saliency_of_hierarchy`` evaluates the
same range queries for every edge at once, vectorized.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph, WeightMap, normalize_weights, _frozen
from .hierarchy import Dendrogram, qfz


def _floor_log2_table(n):
    """logs[i] = floor(log2(i)) for i in 1..n (index 0 unused)."""
    logs = np.zeros(n + 1, dtype=np.int64)
    j = 2
    while j <= n:
        logs[j:] += 1
        j <<= 1
    return logs


class _BlockRange:
    """Blocked range reduction (min or max) with O(1) lookups.

    Spans shorter than one block answer through sliding-window tables;
    longer spans combine a block suffix, whole blocks through a sparse
    table over block reductions, and a block prefix. The block-level
    table is tiny (values/block entries), so the working set a long
    query touches stays small no matter how large the input grows.
    """

    __slots__ = (
        "values",
        "block",
        "op",
        "_win",
        "_win_logs",
        "_prefix",
        "_suffix",
        "_btables",
        "_block_logs",
        "_nblocks",
    )

    def __init__(self, values, op, block=64):
        v = np.asarray(values)
        if not np.issubdtype(v.dtype, np.integer):
            v = v.astype(np.int64)
        self.values = v
        self.block = block
        self.op = op
        self._win_logs = _floor_log2_table(block)
        n = len(v)
        info = np.iinfo(v.dtype)
        sentinel = info.min if op is np.maximum else info.max
        win = [v]
        j = 1
        while (1 << j) <= block and (1 << j) <= max(n, 1):
            prev = win[-1]
            half = 1 << (j - 1)
            length = max(n - (1 << j) + 1, 0)
            win.append(op(prev[:length], prev[half : half + length]))
            j += 1
        self._win = win
        nb = -(-n // block) if n else 0
        self._nblocks = nb
        if n:
            padded = np.full(nb * block, sentinel, dtype=v.dtype)
            padded[:n] = v
            rows = padded.reshape(nb, block)
            self._prefix = op.accumulate(rows, axis=1).ravel()
            self._suffix = op.accumulate(rows[:, ::-1], axis=1)[:, ::-1].ravel()
            bm = op.reduce(rows, axis=1)
        else:
            self._prefix = v
            self._suffix = v
            bm = v
        tables = [bm]
        j = 1
        while (1 << j) <= nb:
            prev = tables[-1]
            half = 1 << (j - 1)
            length = nb - (1 << j) + 1
            tables.append(op(prev[:length], prev[half : half + length]))
            j += 1
        self._btables = tables
        self._block_logs = _floor_log2_table(max(nb, 1))

    def _window(self, lo, hi):
        """Reduce values[lo..hi] for spans of at most one block."""
        j = self._win_logs[hi - lo + 1]
        out = np.empty(len(lo), dtype=np.int64)
        for jv in np.unique(j):
            mask = j == jv
            table = self._win[jv]
            out[mask] = self.op(
                table[lo[mask]], table[hi[mask] - (1 << int(jv)) + 1]
            )
        return out

    def _block_span(self, s, e):
        """Reduce whole blocks s..e inclusive (s <= e elementwise)."""
        j = self._block_logs[e - s + 1]
        out = np.empty(len(s), dtype=np.int64)
        for jv in np.unique(j):
            mask = j == jv
            table = self._btables[jv]
            out[mask] = self.op(
                table[s[mask]], table[e[mask] - (1 << int(jv)) + 1]
            )
        return out

    def query_bulk(self, lo, hi):
        """Reduce values[lo..hi] inclusive for parallel index arrays."""
        lo = np.asarray(lo, dtype=np.int64)
        hi = np.asarray(hi, dtype=np.int64)
        res = np.empty(len(lo), dtype=np.int64)
        short = hi - lo < self.block
        if short.any():
            res[short] = self._window(lo[short], hi[short])
        long = ~short
        if long.any():
            ll, hh = lo[long], hi[long]
            bl = ll // self.block
            br = hh // self.block
            # spans of a block or more never share a block
            out = self.op(self._suffix[ll], self._prefix[hh])
            mid = br - bl >= 2
            if mid.any():
                out[mid] = self.op(
                    out[mid], self._block_span(bl[mid] + 1, br[mid] - 1)
                )
            res[long] = out
        return res


class LCAIndex:
    """Constant-time least-common-ancestor queries over a dendrogram.

    Carries the Euler tour of the tree (node sequence and depths) and
    the first tour occurrence of every node: the minimum-depth node on
    the tour between the first occurrences of two leaves is their LCA.

    Queries run over an equivalent, denser encoding of the same
    range-minimum idea: in depth-first leaf order, the ancestor where
    consecutive leaves merge sits strictly above everything between
    them, so the extremal break between two leaf positions is the LCA.
    The break arrays hold one entry per leaf instead of two per tour
    step, which keeps the per-query working set small and the measured
    latency flat across structure sizes.
    """

    __slots__ = (
        "dendrogram",
        "euler",
        "depth",
        "first",
        "_leaf_pos",
        "_rmq",
        "_node_mask",
    )

    def __init__(self, dendrogram: Dendrogram):
        self.dendrogram = dendrogram
        euler, depth, first = _euler_tour(dendrogram)
        self.euler = _frozen(euler)
        self.depth = _frozen(depth)
        self.first = _frozen(first)
        leaf_pos, breaks = dendrogram.leaf_order()
        self._leaf_pos = _frozen(leaf_pos.astype(np.int32))
        # pack (break level, owning node) so the range maximum IS the
        # answer: all maximal breaks of a span share the span's common
        # ancestor, no follow-up lookup needed
        pad = 1 << max(dendrogram.node_count - 1, 1).bit_length()
        self._node_mask = pad - 1
        packed = breaks * pad + dendrogram.break_nodes()
        if len(packed) == 0 or packed.max() < np.iinfo(np.int32).max:
            packed = packed.astype(np.int32)
        self._rmq = _BlockRange(packed, np.maximum)

    def query(self, x, y) -> int:
        """Least common ancestor of two leaves."""
        if x == y:
            return int(x)
        leaf_pos = self._leaf_pos
        l = int(leaf_pos[x])
        r = int(leaf_pos[y])
        if l > r:
            l, r = r, l
        r -= 1  # breaks between positions l..r
        rmq = self._rmq
        bl = l >> 6
        br = r >> 6
        if bl == br:
            j = (r - l + 1).bit_length() - 1
            win = rmq._win[j]
            a = int(win[l])
            b = int(win[r - (1 << j) + 1])
            if b > a:
                a = b
        else:
            a = int(rmq._suffix[l])
            b = int(rmq._prefix[r])
            if b > a:
                a = b
            span = br - bl - 1
            if span >= 1:
                j = span.bit_length() - 1
                table = rmq._btables[j]
                c = int(table[bl + 1])
                d = int(table[br - (1 << j)])
                if d > c:
                    c = d
                if c > a:
                    a = c
        return a & self._node_mask

    def query_bulk(self, xs, ys) -> np.ndarray:
        """Vectorized LCA for parallel arrays of leaves."""
        xs = np.asarray(xs)
        ys = np.asarray(ys)
        l = self._leaf_pos[xs].astype(np.int64)
        r = self._leaf_pos[ys].astype(np.int64)
        lo = np.minimum(l, r)
        hi = np.maximum(l, r)
        out = np.empty(len(lo), dtype=np.int64)
        same = lo == hi
        if same.any():
            out[same] = xs[same]
        rest = ~same
        if rest.any():
            best = self._rmq.query_bulk(lo[rest], hi[rest] - 1)
            out[rest] = best & self._node_mask
        return out


def _euler_tour(dendrogram):
    n = dendrogram.leaf_count
    total = dendrogram.node_count
    if total == 1:
        return (
            np.zeros(1, dtype=np.int32),
            np.zeros(1, dtype=np.int32),
            np.zeros(1, dtype=np.int32),
        )
    flat, start = dendrogram.children()
    flat = flat.tolist()
    start = start.tolist()
    m = 2 * total - 1
    euler = np.empty(m, dtype=np.int32)
    depth = np.empty(m, dtype=np.int32)
    first = np.full(total, -1, dtype=np.int32)
    pos = 0
    stack = [(dendrogram.root, 0, 0)]
    while stack:
        node, d, cursor = stack.pop()
        if cursor == 0:
            first[node] = pos
        euler[pos] = node
        depth[pos] = d
        pos += 1
        if node >= n:
            j = node - n
            if cursor < start[j + 1] - start[j]:
                stack.append((node, d, cursor + 1))
                stack.append((flat[start[j] + cursor], d + 1, 0))
    return euler, depth, first


def build_lca(dendrogram: Dendrogram) -> LCAIndex:
    """Preprocess a dendrogram for constant-time LCA queries."""
    return LCAIndex(dendrogram)


class _RangeMax(_BlockRange):
    """Range-maximum view of the blocked structure."""

    def __init__(self, values, block=64):
        super().__init__(values, np.maximum, block)


class SaliencyMap:
    """Per-edge saliency values in the rank scale {0..m-1}.

    Values are merge levels minus one, so an edge whose endpoints fuse
    at the very first level carries 0. A weight map is a saliency map
    exactly when the saliency opening leaves its ranks unchanged.
    """

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = _frozen(np.asarray(values, dtype=np.int64))

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, SaliencyMap):
            return NotImplemented
        return np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())

    def raw_values(self, weight_map: WeightMap) -> np.ndarray:
        """Express the values through the raw weights of the map that
        produced them: each value is the rank of some merging edge, and
        this returns that edge's raw weight instead of its rank."""
        lut = weight_map.raw_of_rank()
        return lut[self.values]

    def as_weight_map(self, graph: Graph) -> WeightMap:
        """The values re-normalized as a weight map of the same graph."""
        return normalize_weights(graph, self.values.astype(np.float64))

    def __repr__(self):
        return f"SaliencyMap({len(self.values)} edges)"


def saliency_of_hierarchy(dendrogram: Dendrogram, graph: Graph) -> SaliencyMap:
    """Saliency map of a hierarchy over its host graph.

    Every edge's value is the level of its endpoints' least common
    ancestor minus one, computed for the whole edge set at once via
    range-maximum queries over the leaf-order break levels.
    """
    if dendrogram.leaf_count != graph.vertex_count:
        raise ValueError("dendrogram leaves do not match the graph's vertices")
    if graph.edge_count == 0:
        return SaliencyMap(np.zeros(0, dtype=np.int64))
    leaf_pos, breaks = dendrogram.leaf_order()
    px = leaf_pos[graph.edges[:, 0]]
    py = leaf_pos[graph.edges[:, 1]]
    lo = np.minimum(px, py)
    hi = np.maximum(px, py)
    levels = _RangeMax(breaks).query_bulk(lo, hi - 1)
    return SaliencyMap(levels - 1)


def saliency_via_lca(dendrogram: Dendrogram, graph: Graph, index: LCAIndex | None = None) -> SaliencyMap:
    """Same map as ``saliency_of_hierarchy``, evaluated edge by edge
    through an ``LCAIndex``; used to cross-check the two structures."""
    if dendrogram.leaf_count != graph.vertex_count:
        raise ValueError("dendrogram leaves do not match the graph's vertices")
    if graph.edge_count == 0:
        return SaliencyMap(np.zeros(0, dtype=np.int64))
    if index is None:
        index = build_lca(dendrogram)
    nodes = index.query_bulk(graph.edges[:, 0], graph.edges[:, 1])
    node_levels = dendrogram.node_levels()
    return SaliencyMap(node_levels[nodes] - 1)


def psi(graph: Graph, weight_map) -> SaliencyMap:
    """Saliency opening: the saliency map of the weights' own
    quasi-flat zone hierarchy. Anti-extensive, increasing, and
    idempotent; its fixed points are exactly the saliency maps.

    Accepts a WeightMap (levels follow its dense ranks) or a
    SaliencyMap (levels follow its values), so openings compose
    without re-ranking: psi(G, psi(G, w)) == psi(G, w) value for
    value.
    """
    return saliency_of_hierarchy(qfz(graph, weight_map), graph)


def is_saliency_map(graph: Graph, weight_map) -> bool:
    """Whether the weights are the saliency map of some hierarchy,
    decided by the fixed-point test on the level scale (ranks of a
    WeightMap, values of a SaliencyMap)."""
    from .hierarchy import _level_values

    scale, _ = _level_values(weight_map, graph.edge_count)
    return bool(np.array_equal(psi(graph, weight_map).values, scale))

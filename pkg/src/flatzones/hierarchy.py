"""Quasi-flat zone hierarchies and their canonical dendrograms.

The hierarchy of a weighted graph stacks, for every level L in {0..m},
the connected-component partition of the subgraph keeping edges of rank
below L. Level 0 gives singletons and level m gives the whole vertex
set, so the stack is a complete hierarchy whenever the graph is
connected. Most consecutive levels repeat; the dendrogram stores only
the distinct merges.

Canonical form. Leaves are the vertices 0..n-1. Internal nodes carry
the level at which their region forms, have at least two children, and
sit strictly above each child's level (equal-level merge chains are
collapsed into one multi-child node). Internal ids n..n+k-1 are
assigned by (level, smallest contained leaf), children are ordered by
smallest contained leaf. Two hierarchies agree level-by-level exactly
when their canonical dendrograms are identical arrays, which is what
``hierarchy_equal`` compares.

Construction runs a Kruskal-style sweep over edges in increasing rank
order, merging components with a union-find forest. Two strategies
implement the same sweep: a plain per-edge loop, and a plateau-batched
variant that processes all edges of one rank at a time with vectorized
relabeling (much faster when the weights hold few distinct values, the
typical case for image gradients).
"""

from __future__ import annotations

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _cs_connected_components

from .errors import DisconnectedGraphError, FormatError
from .graph import Graph, Partition, _check_edge_subset, _frozen

# The plateau-batched strategy pays one full relabel per distinct rank,
# so it only wins on large inputs with few plateaus.
_LEVELED_MIN_EDGES = 65536
_LEVELED_MAX_RANKS = 1024


def _level_values(weights, edge_count):
    """Per-edge level-scale values of a weight or saliency map.

    A WeightMap contributes its dense ranks (the standing wlog
    normalization). A SaliencyMap contributes its values verbatim:
    they already live in {0..m-1} and carry an absolute level meaning,
    so re-ranking them would compress the hierarchy's level axis and
    break the weights-to-saliency round trip.

    Returns (values, distinct_upper_bound).
    """
    if hasattr(weights, "rank"):
        values = weights.rank
        distinct = weights.rank_count
    elif hasattr(weights, "values"):
        values = weights.values
        distinct = int(values.max()) + 1 if len(values) else 0
        if len(values) and (values.min() < 0 or values.max() >= edge_count):
            raise ValueError("saliency values must lie in 0..m-1")
    else:
        raise TypeError("expected a WeightMap or a SaliencyMap")
    if len(values) != edge_count:
        raise ValueError("weight map does not match the graph")
    return values, distinct


class Dendrogram:
    """Canonical merge tree of a complete connected hierarchy.

    ``levels[j]`` is the level of internal node n+j, ``parent[v]`` the
    parent id of any node (-1 for the root). Children lists, subtree
    statistics, and the leaf ordering used by saliency queries are
    derived lazily and cached; instances are immutable.
    """

    __slots__ = (
        "leaf_count",
        "levels",
        "parent",
        "level_bound",
        "_children_flat",
        "_children_start",
        "_min_leaf",
        "_leaf_counts",
        "_leaf_pos",
        "_breaks",
        "_break_nodes",
        "_level_groups",
    )

    def __init__(self, leaf_count, levels, parent, level_bound):
        self.leaf_count = int(leaf_count)
        self.levels = _frozen(np.asarray(levels, dtype=np.int64))
        self.parent = _frozen(np.asarray(parent, dtype=np.int64))
        self.level_bound = int(level_bound)
        self._children_flat = None
        self._children_start = None
        self._min_leaf = None
        self._leaf_counts = None
        self._leaf_pos = None
        self._breaks = None
        self._break_nodes = None
        self._level_groups = None

    # -- basic shape ------------------------------------------------------

    @property
    def internal_count(self) -> int:
        return len(self.levels)

    @property
    def node_count(self) -> int:
        return self.leaf_count + len(self.levels)

    @property
    def root(self) -> int:
        return self.node_count - 1

    def level_of(self, node) -> int:
        """Level of any node; leaves sit at level 0."""
        node = int(node)
        if node < self.leaf_count:
            return 0
        return int(self.levels[node - self.leaf_count])

    def node_levels(self) -> np.ndarray:
        """Levels for all nodes, leaves first."""
        return np.concatenate(
            [np.zeros(self.leaf_count, dtype=np.int64), self.levels]
        )

    def __repr__(self):
        return (
            f"Dendrogram({self.leaf_count} leaves, {self.internal_count} merges,"
            f" levels<= {self.level_bound})"
        )

    # -- derived structure -------------------------------------------------

    def _level_grouping(self):
        """(group_starts, group_levels) over internal nodes, which are
        stored sorted by level."""
        if self._level_groups is None:
            lv = self.levels
            if len(lv) == 0:
                self._level_groups = (np.zeros(1, dtype=np.int64), lv)
            else:
                starts = np.flatnonzero(np.r_[True, lv[1:] != lv[:-1]])
                self._level_groups = (
                    np.r_[starts, len(lv)],
                    lv[starts],
                )
        return self._level_groups

    def min_leaf(self) -> np.ndarray:
        """Smallest leaf id inside each node's subtree."""
        if self._min_leaf is None:
            n = self.leaf_count
            ml = np.concatenate(
                [np.arange(n, dtype=np.int64), np.full(len(self.levels), n, dtype=np.int64)]
            )
            parent = self.parent
            # propagate upward one level stratum at a time; parents sit
            # strictly above their children so each stratum is final
            # before it feeds the next
            leaves = np.arange(n)
            has_p = parent[leaves] >= 0
            np.minimum.at(ml, parent[leaves[has_p]], ml[leaves[has_p]])
            starts, _ = self._level_grouping()
            for g in range(len(starts) - 1):
                ids = np.arange(n + starts[g], n + starts[g + 1])
                p = parent[ids]
                inner = p >= 0
                np.minimum.at(ml, p[inner], ml[ids[inner]])
            self._min_leaf = _frozen(ml)
        return self._min_leaf

    def children(self):
        """(flat, start): children of internal node n+j, each list ordered
        by smallest contained leaf, stored CSR-style."""
        if self._children_flat is None:
            n = self.leaf_count
            ml = self.min_leaf()
            nodes = np.arange(self.node_count)
            nonroot = nodes[self.parent >= 0]
            order = np.lexsort((ml[nonroot], self.parent[nonroot]))
            flat = nonroot[order]
            counts = np.bincount(
                self.parent[nonroot] - n, minlength=len(self.levels)
            )
            start = np.r_[0, np.cumsum(counts)]
            self._children_flat = _frozen(flat)
            self._children_start = _frozen(start)
        return self._children_flat, self._children_start

    def leaf_counts(self) -> np.ndarray:
        """Number of leaves below each node."""
        if self._leaf_counts is None:
            n = self.leaf_count
            counts = np.concatenate(
                [np.ones(n, dtype=np.int64), np.zeros(len(self.levels), dtype=np.int64)]
            )
            parent = self.parent
            leaves = np.arange(n)
            has_p = parent[leaves] >= 0
            np.add.at(counts, parent[leaves[has_p]], counts[leaves[has_p]])
            starts, _ = self._level_grouping()
            for g in range(len(starts) - 1):
                ids = np.arange(n + starts[g], n + starts[g + 1])
                p = parent[ids]
                inner = p >= 0
                np.add.at(counts, p[inner], counts[ids[inner]])
            self._leaf_counts = _frozen(counts)
        return self._leaf_counts

    def leaf_order(self):
        """(leaf_pos, breaks): depth-first leaf positions plus the merge
        level separating each pair of consecutive leaves.

        The level at which any two leaves merge is the maximum break
        value between their positions, which reduces least-common-
        ancestor levels to range-maximum queries.
        """
        if self._leaf_pos is None:
            self._leaf_pos, self._breaks, self._break_nodes = (
                self._compute_leaf_order()
            )
        return self._leaf_pos, self._breaks

    def break_nodes(self) -> np.ndarray:
        """Internal node owning each leaf-order break.

        Consecutive leaves i and i+1 merge exactly at this node; every
        maximal break in a leaf span belongs to the span's common
        ancestor, so an argmax over breaks resolves LCA queries.
        """
        if self._break_nodes is None:
            self.leaf_order()
        return self._break_nodes

    def _compute_leaf_order(self):
        n = self.leaf_count
        if self.internal_count == 0:
            return (
                _frozen(np.zeros(n, dtype=np.int64)),
                _frozen(np.zeros(0, dtype=np.int64)),
                _frozen(np.zeros(0, dtype=np.int64)),
            )
        flat, start = self.children()
        counts = self.leaf_counts()
        entry = np.zeros(self.node_count, dtype=np.int64)
        breaks = np.zeros(n - 1, dtype=np.int64)
        break_nodes = np.zeros(n - 1, dtype=np.int64)
        starts, group_levels = self._level_grouping()
        # walk level strata from the root down; entries of a stratum's
        # nodes are final before its children are placed
        for g in range(len(starts) - 2, -1, -1):
            i0, i1 = starts[g], starts[g + 1]
            lo, hi = start[i0], start[i1]
            c = flat[lo:hi]
            sz = counts[c]
            cs = np.cumsum(sz) - sz
            seg = start[i0:i1] - lo
            lens = start[i0 + 1 : i1 + 1] - start[i0:i1]
            base = np.repeat(cs[seg], lens)
            parents = np.repeat(np.arange(n + i0, n + i1), lens)
            ent_par = np.repeat(entry[n + i0 : n + i1], lens)
            entry[c] = ent_par + (cs - base)
            first = np.zeros(len(c), dtype=bool)
            first[seg] = True
            nonfirst = c[~first]
            positions = entry[nonfirst] - 1
            breaks[positions] = group_levels[g]
            break_nodes[positions] = parents[~first]
        return _frozen(entry[:n]), _frozen(breaks), _frozen(break_nodes)

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Dendrogram):
            return NotImplemented
        return (
            self.leaf_count == other.leaf_count
            and np.array_equal(self.levels, other.levels)
            and np.array_equal(self.parent, other.parent)
        )

    def __hash__(self):
        return hash((self.leaf_count, self.levels.tobytes(), self.parent.tobytes()))

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        """Serialize: "n k" then one "id level children..." line per
        internal node, children before parents."""
        n = self.leaf_count
        flat, start = self.children()
        out = [f"{n} {self.internal_count}"]
        for j in range(self.internal_count):
            kids = " ".join(str(int(c)) for c in flat[start[j] : start[j + 1]])
            out.append(f"{n + j} {int(self.levels[j])} {kids}")
        return "\n".join(out) + "\n"

    @classmethod
    def from_text(cls, text: str, level_bound=None) -> "Dendrogram":
        """Parse and validate the dendrogram text format.

        Node ids must be n..n+k-1 in line order with children preceding
        parents; levels must strictly exceed every child's level. The
        level bound defaults to the root level because the format does
        not carry the host graph's edge count.
        """
        rows = []
        for raw in text.splitlines():
            body = raw.split("#", 1)[0].strip()
            if body:
                rows.append(body.split())
        if not rows:
            raise FormatError("empty dendrogram file")
        if len(rows[0]) != 2:
            raise FormatError("header must be 'n k'")
        n, k = int(rows[0][0]), int(rows[0][1])
        if n < 1 or k < 0 or len(rows) - 1 != k:
            raise FormatError(f"expected {k} node lines, found {len(rows) - 1}")
        total = n + k
        parent = np.full(total, -1, dtype=np.int64)
        levels = np.zeros(k, dtype=np.int64)
        node_level = np.zeros(total, dtype=np.int64)
        for j, fields in enumerate(rows[1:]):
            if len(fields) < 4:
                raise FormatError(f"node line {j}: need id, level, and two children")
            node_id, level = int(fields[0]), int(fields[1])
            kids = [int(c) for c in fields[2:]]
            if node_id != n + j:
                raise FormatError(
                    f"node ids must be {n}..{n + k - 1} in order, got {node_id}"
                )
            if level < 1:
                raise FormatError("internal levels must be positive")
            if len(kids) < 2:
                raise FormatError(f"node {node_id} must have at least two children")
            for c in kids:
                if not 0 <= c < node_id:
                    raise FormatError(
                        f"child {c} of node {node_id} must be an earlier node"
                    )
                if parent[c] != -1:
                    raise FormatError(f"node {c} has two parents")
                if node_level[c] >= level:
                    raise FormatError(
                        f"node {node_id} at level {level} does not sit above child {c}"
                    )
                parent[c] = node_id
            levels[j] = level
            node_level[node_id] = level
        if (parent[: total - 1] == -1).any():
            raise FormatError("every node except the root needs a parent")
        if total > 1 and parent[total - 1] != -1:
            raise FormatError("the last node must be the root")
        dg = _canonical_renumber(n, levels, parent)
        bound = int(level_bound) if level_bound is not None else (
            int(levels.max()) if k else 0
        )
        if k and bound < int(levels.max()):
            raise FormatError("level bound below the root level")
        return cls(n, dg[0], dg[1], bound)


def _canonical_renumber(n, levels, parent):
    """Re-id internal nodes by (level, smallest leaf) keeping the
    parent relation; input ids must already be topological."""
    k = len(levels)
    total = n + k
    ml = np.concatenate([np.arange(n, dtype=np.int64), np.full(k, n, dtype=np.int64)])
    for v in range(total):  # topological: children come first
        p = parent[v]
        if p >= 0 and ml[p] > ml[v]:
            ml[p] = ml[v]
    order = np.lexsort((ml[n:], levels))
    new_id = np.empty(total, dtype=np.int64)
    new_id[:n] = np.arange(n)
    new_id[n + order] = n + np.arange(k)
    parent_new = np.full(total, -1, dtype=np.int64)
    old_nonroot = np.flatnonzero(parent >= 0)
    parent_new[new_id[old_nonroot]] = new_id[parent[old_nonroot]]
    return levels[order], parent_new


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _sweep_build(n, ex, ey, order, ranks):
    """Per-edge Kruskal sweep; returns raw binary merge arrays."""
    par = list(range(n))
    rnk = [0] * n
    top = list(range(n))
    parent_raw = [-1] * n
    level_raw = [0] * n
    minleaf_raw = list(range(n))
    merges = 0
    for u in order:
        x = ex[u]
        rx = x
        while par[rx] != rx:
            par[rx] = par[par[rx]]
            rx = par[rx]
        y = ey[u]
        ry = y
        while par[ry] != ry:
            par[ry] = par[par[ry]]
            ry = par[ry]
        if rx == ry:
            continue
        node = n + merges
        merges += 1
        tx = top[rx]
        ty = top[ry]
        parent_raw[tx] = node
        parent_raw[ty] = node
        parent_raw.append(-1)
        level_raw.append(ranks[u] + 1)
        a = minleaf_raw[tx]
        b = minleaf_raw[ty]
        minleaf_raw.append(a if a < b else b)
        if rnk[rx] < rnk[ry]:
            rx, ry = ry, rx
        par[ry] = rx
        if rnk[rx] == rnk[ry]:
            rnk[rx] += 1
        top[rx] = node
    return merges, parent_raw, level_raw, minleaf_raw


def _canonicalize_binary(n, merges, parent_raw, level_raw, minleaf_raw):
    """Collapse equal-level merge chains of the raw binary tree into
    multi-child nodes and renumber canonically."""
    total = n + merges
    parent = np.asarray(parent_raw, dtype=np.int64)
    level = np.asarray(level_raw, dtype=np.int64)
    minleaf = np.asarray(minleaf_raw, dtype=np.int64)
    self_idx = np.arange(total, dtype=np.int64)
    pr = np.where(parent >= 0, parent, self_idx)
    rep = np.where((parent >= 0) & (level[pr] == level) & (level > 0), pr, self_idx)
    while True:
        nxt = rep[rep]
        if np.array_equal(nxt, rep):
            break
        rep = nxt
    survive = rep == self_idx
    internal = survive.copy()
    internal[:n] = False
    surv_internal = np.flatnonzero(internal)
    order = np.lexsort((minleaf[surv_internal], level[surv_internal]))
    surv_sorted = surv_internal[order]
    k = len(surv_sorted)
    new_id = np.full(total, -1, dtype=np.int64)
    new_id[:n] = np.arange(n)
    new_id[surv_sorted] = n + np.arange(k)
    keep = np.flatnonzero(survive)
    parent_new = np.full(n + k, -1, dtype=np.int64)
    rp = parent[keep]
    has_p = rp >= 0
    parent_new[new_id[keep[has_p]]] = new_id[rep[rp[has_p]]]
    return level[surv_sorted], parent_new


def _leveled_build(n, ex, ey, order, ranks_sorted):
    """Plateau-batched sweep: one vectorized round per distinct rank.

    Components are named by their current top tree node; a persistent
    mapping array retires component names as merges happen, and the
    per-vertex component array is refreshed by one gather per round.
    Produces canonical arrays directly (rounds visit levels in
    increasing order, groups within a round are sorted by smallest
    leaf, and a round merges whole plateaus so no equal-level chains
    ever form).
    """
    cap = 2 * n
    parent = np.full(cap, -1, dtype=np.int64)
    minleaf = np.empty(cap, dtype=np.int64)
    minleaf[:n] = np.arange(n)
    mapping = np.arange(cap, dtype=np.int64)
    comp = np.arange(n, dtype=np.int64)
    n_nodes = n
    merged = 0  # binary merge count: a k-child node contributes k-1
    level_parts = []
    if len(order):
        bounds = np.flatnonzero(np.r_[True, ranks_sorted[1:] != ranks_sorted[:-1]])
        bounds = np.r_[bounds, len(order)]
    else:
        bounds = np.array([0], dtype=np.int64)
    for i in range(len(bounds) - 1):
        ids = order[bounds[i] : bounds[i + 1]]
        lvl = int(ranks_sorted[bounds[i]]) + 1
        comp = mapping[comp]
        a = comp[ex[ids]]
        b = comp[ey[ids]]
        distinct = a != b
        if not distinct.any():
            continue
        a = a[distinct]
        b = b[distinct]
        uc, inv = np.unique(np.concatenate([a, b]), return_inverse=True)
        K = len(uc)
        # int64 data: duplicate pairs are summed on conversion and two
        # regions can share arbitrarily many equal-rank boundary edges
        mini = coo_matrix(
            (np.ones(len(a), dtype=np.int64), (inv[: len(a)], inv[len(a) :])),
            shape=(K, K),
        )
        ngroups, glab = _cs_connected_components(mini, directed=False)
        ml = minleaf[uc]
        s = np.argsort(glab, kind="stable")
        goff = np.flatnonzero(np.r_[True, glab[s][1:] != glab[s][:-1]])
        gmin = np.minimum.reduceat(ml[s], goff)
        pos = np.empty(ngroups, dtype=np.int64)
        pos[np.argsort(gmin, kind="stable")] = np.arange(ngroups)
        node_of_group = n_nodes + pos
        parent[uc] = node_of_group[glab]
        mapping[uc] = node_of_group[glab]
        # gmin is indexed by group label (labels appear sorted), place by pos
        new_min = np.empty(ngroups, dtype=np.int64)
        new_min[pos] = gmin
        minleaf[n_nodes : n_nodes + ngroups] = new_min
        level_parts.append(np.full(ngroups, lvl, dtype=np.int64))
        n_nodes += ngroups
        merged += K - ngroups
    levels = (
        np.concatenate(level_parts) if level_parts else np.zeros(0, dtype=np.int64)
    )
    return merged, levels, parent[:n_nodes]


def qfz(graph: Graph, weight_map, edge_subset=None, strategy="auto") -> Dendrogram:
    """Build the quasi-flat zone dendrogram of a connected (sub)graph.

    `weight_map` may be a WeightMap (levels follow its dense ranks) or
    a SaliencyMap (levels follow its values, see ``_level_values``).
    The optional edge subset restricts to a spanning subgraph (the
    vertex set stays the whole of V); levels still live in {0..m} of
    the host graph. Raises DisconnectedGraphError when the (sub)graph
    does not connect all vertices.

    `strategy` selects the sweep implementation ("sweep", "leveled", or
    "auto"); both produce the identical canonical dendrogram.
    """
    n = graph.vertex_count
    m = graph.edge_count
    rank, distinct = _level_values(weight_map, m)
    if edge_subset is None:
        subset = np.arange(m, dtype=np.int64)
    else:
        subset = _check_edge_subset(graph, edge_subset)
    if n == 1:
        return Dendrogram(1, [], [-1], m)
    sub_rank = rank[subset]
    order_local = np.argsort(sub_rank, kind="stable")
    order = subset[order_local]
    if strategy == "auto":
        strategy = (
            "leveled"
            if len(subset) >= _LEVELED_MIN_EDGES and distinct <= _LEVELED_MAX_RANKS
            else "sweep"
        )
    ex = graph.edges[:, 0]
    ey = graph.edges[:, 1]
    if strategy == "leveled":
        merges, levels, parent = _leveled_build(
            n, ex, ey, order, sub_rank[order_local]
        )
        if merges != n - 1:
            raise DisconnectedGraphError(
                "edge subset does not connect the vertex set"
            )
        return Dendrogram(n, levels, parent, m)
    if strategy != "sweep":
        raise ValueError(f"unknown strategy {strategy!r}")
    merges, parent_raw, level_raw, minleaf_raw = _sweep_build(
        n, ex.tolist(), ey.tolist(), order.tolist(), rank.tolist()
    )
    if merges != n - 1:
        raise DisconnectedGraphError("edge subset does not connect the vertex set")
    levels, parent = _canonicalize_binary(n, merges, parent_raw, level_raw, minleaf_raw)
    return Dendrogram(n, levels, parent, m)


def level_partition(graph: Graph, weight_map, level, edge_subset=None) -> Partition:
    """Components of the subgraph keeping subset edges of rank < level."""
    from .graph import connected_components

    m = graph.edge_count
    rank, _ = _level_values(weight_map, m)
    if not 0 <= level <= m:
        raise ValueError(f"level must lie in 0..{m}, got {level}")
    if edge_subset is None:
        subset = np.arange(m, dtype=np.int64)
    else:
        subset = _check_edge_subset(graph, edge_subset)
    kept = subset[rank[subset] < level]
    return connected_components(graph, kept)


def partition_at(dendrogram: Dendrogram, level) -> Partition:
    """Partition stored at a level: each vertex joins the highest
    ancestor of its leaf whose level does not exceed the query."""
    if not 0 <= level <= dendrogram.level_bound:
        raise ValueError(
            f"level must lie in 0..{dendrogram.level_bound}, got {level}"
        )
    parent = dendrogram.parent
    node_levels = dendrogram.node_levels()
    self_idx = np.arange(dendrogram.node_count)
    p_safe = np.where(parent >= 0, parent, self_idx)
    hop = np.where(node_levels[p_safe] <= level, p_safe, self_idx)
    while True:
        nxt = hop[hop]
        if np.array_equal(nxt, hop):
            break
        hop = nxt
    return Partition(hop[: dendrogram.leaf_count])


def hierarchy_equal(d1: Dendrogram, d2: Dendrogram) -> bool:
    """Whether two dendrograms carry the same partition at every level.

    Canonical form makes this a structural array comparison.
    """
    if d1.leaf_count != d2.leaf_count:
        raise ValueError("dendrograms cover different leaf counts")
    return d1 == d2


class HierarchyView:
    """Sequence-like access to the partitions of a dendrogram.

    ``view[L]`` returns the level-L partition; levels run 0..bound
    inclusive. Iteration yields the partitions of the distinct levels
    only (each run of equal partitions once).
    """

    __slots__ = ("dendrogram",)

    def __init__(self, dendrogram: Dendrogram):
        self.dendrogram = dendrogram

    def __len__(self):
        return self.dendrogram.level_bound + 1

    def __getitem__(self, level) -> Partition:
        return partition_at(self.dendrogram, level)

    def partition_at(self, level) -> Partition:
        return partition_at(self.dendrogram, level)

    def distinct_levels(self):
        """Sorted levels at which the partition changes, starting at 0."""
        lv = [0]
        lv.extend(sorted(set(self.dendrogram.levels.tolist())))
        return lv

    def __iter__(self):
        for level in self.distinct_levels():
            yield partition_at(self.dendrogram, level)


def from_partition_sequence(partitions, level_bound=None) -> Dendrogram:
    """Rebuild the canonical dendrogram of a nested partition sequence.

    The sequence must start at singletons, end with a single region,
    and each partition must refine the next. Intended for round-trip
    checks and for constructing hierarchies from explicit level data.
    """
    from .graph import refines

    if not partitions:
        raise ValueError("empty partition sequence")
    n = len(partitions[0])
    if partitions[0].region_count != n:
        raise ValueError("level 0 must contain every singleton")
    if partitions[-1].region_count != 1:
        raise ValueError("the last level must be a single region")
    cur = list(range(n))  # vertex -> current node id
    parent_raw = [-1] * n
    level_raw = [0] * n
    minleaf_raw = list(range(n))
    n_nodes = n
    prev = partitions[0]
    for lam, part in enumerate(partitions):
        if lam == 0:
            continue
        if len(part) != n:
            raise ValueError("partitions cover different vertex counts")
        if not refines(prev, part):
            raise ValueError(f"level {lam - 1} does not refine level {lam}")
        prev = part
        regions = part.regions()
        for members in regions:
            kids = sorted({cur[v] for v in members})
            if len(kids) < 2:
                continue
            node = n_nodes
            n_nodes += 1
            parent_raw.append(-1)
            level_raw.append(lam)
            minleaf_raw.append(min(minleaf_raw[c] for c in kids))
            for c in kids:
                parent_raw[c] = node
            for v in members:
                cur[v] = node
    levels, parent = _canonicalize_binary(
        n, n_nodes - n, parent_raw, level_raw, minleaf_raw
    )
    bound = int(level_bound) if level_bound is not None else len(partitions) - 1
    return Dendrogram(n, levels, parent, bound)

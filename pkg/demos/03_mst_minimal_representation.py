"""Minimum spanning trees as minimal hierarchy carriers.

A minimum spanning tree drops every edge the hierarchy does not need:
its quasi-flat zones are exactly those of the full graph, and no
further edge can go. The checker here decides MST-ness from that
property alone (no weight comparisons), and exhaustive enumeration
confirms it agrees with weight minimality.
"""

import numpy as np

import flatzones as fz
from flatzones.oracle import spanning_tree_enumerate


def main():
    rng = np.random.default_rng(12)
    n = 6
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    graph = fz.validate_graph(n, edges)
    raw = rng.integers(1, 8, size=len(edges)).astype(float)
    weights = fz.normalize_weights(graph, raw)
    print(f"complete graph on {n} vertices, {len(edges)} edges")
    print("raw weights:", raw.tolist())

    tree = fz.kruskal(graph, weights)
    print("\nsweep tree edges:", tree.edge_indices.tolist())
    print("total weight:", fz.total_weight(tree, weights))
    print("hierarchy preserved:",
          fz.hierarchy_equal(fz.qfz(graph, weights, tree.edge_indices),
                             fz.qfz(graph, weights)))
    print("checker verdict:", fz.check_mst_via_qfz(graph, weights, tree))

    trees = spanning_tree_enumerate(graph, weights)
    best = min(w for _, w in trees)
    print(f"\nenumeration: {len(trees)} spanning trees, minimum weight {best}")
    agree = all(
        fz.check_mst_via_qfz(graph, weights, fz.SpanningSubgraph(graph, list(s)))
        == (abs(w - best) < 1e-9)
        for s, w in trees
    )
    print("checker agrees with weight minimality on every candidate:", agree)

    heavy = max(trees, key=lambda t: t[1])
    cand = fz.SpanningSubgraph(graph, list(heavy[0]))
    print(f"\nheaviest tree (weight {heavy[1]}) accepted?",
          fz.check_mst_via_qfz(graph, weights, cand))


if __name__ == "__main__":
    main()

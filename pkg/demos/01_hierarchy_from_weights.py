"""Walk through the hierarchy a weighted graph induces.

Builds a small edge-weighted graph, stacks its level partitions into a
dendrogram, and shows that every level's partition equals the
connected components of the corresponding level set.
"""

import flatzones as fz


def main():
    # a 3x2 grid of vertices, weighted like a tiny image gradient
    #   0 - 1 - 2
    #   |   |   |
    #   3 - 4 - 5
    edges = [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]
    raw = [1.0, 4.0, 1.0, 4.0, 0.5, 0.5, 6.0]
    graph = fz.validate_graph(6, edges)
    weights = fz.normalize_weights(graph, raw)
    print("graph:", graph)
    print("raw weights:", raw)
    print("dense ranks:", weights.rank.tolist())

    dendrogram = fz.qfz(graph, weights)
    print("\ndendrogram:", dendrogram)
    print(dendrogram.to_text())

    view = fz.HierarchyView(dendrogram)
    print("partitions by level (only distinct levels shown):")
    for level in view.distinct_levels():
        part = view[level]
        print(f"  level {level}: {part.regions()}")

    print("\nlevel partitions recomputed from level sets agree:")
    for level in view.distinct_levels():
        direct = fz.level_partition(graph, weights, level)
        stored = view[level]
        print(f"  level {level}: {'same' if direct == stored else 'DIFFERENT'}")


if __name__ == "__main__":
    main()

"""The naive references themselves: frozen values and guard behavior."""

import numpy as np
import pytest

import flatzones as fz
from flatzones import oracle


class TestQfzNaive:
    def test_single_edge(self, fixtures):
        f = fixtures["single"]
        parts = oracle.qfz_naive(f.graph, f.weight_map)
        assert [p.region_count for p in parts] == [2, 1]

    def test_path(self, fixtures):
        f = fixtures["path"]
        parts = oracle.qfz_naive(f.graph, f.weight_map)
        assert [p.region_count for p in parts] == [3, 2, 1]
        assert parts[1].labels[0] == parts[1].labels[1]

    def test_triangle_region_counts(self, fixtures):
        f = fixtures["triangle"]
        parts = oracle.qfz_naive(f.graph, f.weight_map)
        assert [p.region_count for p in parts] == [3, 2, 1, 1]

    def test_nested_and_complete(self, fixtures):
        for f in fixtures.values():
            parts = oracle.qfz_naive(f.graph, f.weight_map)
            for a, b in zip(parts, parts[1:]):
                assert fz.refines(a, b)
            assert parts[0].region_count == f.graph.vertex_count
            assert parts[-1].region_count == 1

    def test_size_guard(self):
        n = oracle.SMALL_GRAPH_LIMIT + 1
        g = fz.Graph(n, [(i, i + 1) for i in range(n - 1)])
        wm = fz.normalize_weights(g, np.arange(n - 1, dtype=float))
        with pytest.raises(ValueError, match="refusing"):
            oracle.qfz_naive(g, wm)

    def test_deterministic(self, fixtures):
        f = fixtures["cycle4"]
        a = oracle.qfz_naive(f.graph, f.weight_map)
        b = oracle.qfz_naive(f.graph, f.weight_map)
        assert all(x == y for x, y in zip(a, b))


class TestSaliencyNaive:
    def test_single_edge(self, fixtures):
        f = fixtures["single"]
        parts = oracle.qfz_naive(f.graph, f.weight_map)
        assert oracle.saliency_naive(f.graph, parts) == [0]

    def test_path(self, fixtures):
        f = fixtures["path"]
        parts = oracle.qfz_naive(f.graph, f.weight_map)
        assert oracle.saliency_naive(f.graph, parts) == [0, 1]

    def test_triangle(self, fixtures):
        f = fixtures["triangle"]
        parts = oracle.qfz_naive(f.graph, f.weight_map)
        assert oracle.saliency_naive(f.graph, parts) == [0, 1, 1]


class TestSpanningTreeEnumerate:
    def test_tree_graph_has_one(self, fixtures):
        f = fixtures["path"]
        assert len(oracle.spanning_tree_enumerate(f.graph, f.weight_map)) == 1

    def test_triangle_weights(self, fixtures):
        f = fixtures["triangle"]
        trees = oracle.spanning_tree_enumerate(f.graph, f.weight_map)
        assert sorted(w for _, w in trees) == [1.0, 2.0, 3.0]

    def test_cycle_count(self, fixtures):
        f = fixtures["cycle4"]
        assert len(oracle.spanning_tree_enumerate(f.graph, f.weight_map)) == 4

    def test_size_guard(self):
        n = oracle.ENUMERATION_LIMIT + 1
        g = fz.Graph(n, [(i, i + 1) for i in range(n - 1)])
        wm = fz.normalize_weights(g, np.arange(n - 1, dtype=float))
        with pytest.raises(ValueError, match="refusing"):
            oracle.spanning_tree_enumerate(g, wm)


class TestMinimalityProbe:
    def test_path_saliency_clean(self, fixtures):
        f = fixtures["path"]
        assert oracle.minimality_probe(f.graph, fz.psi(f.graph, f.weight_map)) == []

    def test_triangle_psi_clean(self, fixtures):
        f = fixtures["triangle"]
        assert oracle.minimality_probe(f.graph, fz.psi(f.graph, f.weight_map)) == []

    def test_rejects_non_saliency_input(self, fixtures):
        f = fixtures["triangle"]
        with pytest.raises(ValueError, match="not a saliency map"):
            oracle.minimality_probe(f.graph, fz.SaliencyMap([0, 1, 2]))


class TestBfsComponents:
    def test_matches_union_find(self, fixtures):
        for f in fixtures.values():
            g = f.graph
            got = oracle.bfs_components(g.vertex_count, g.edges.tolist())
            assert got == fz.connected_components(g)


class TestFixture:
    def test_rejects_large_graphs(self):
        n = oracle.SMALL_GRAPH_LIMIT + 2
        g = fz.Graph(n, [(i, i + 1) for i in range(n - 1)])
        with pytest.raises(ValueError):
            oracle.Fixture("big", g, np.arange(n - 1, dtype=float))

"""Graph, partition, weight-normalization, and text-format behavior."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import flatzones as fz
from flatzones.errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    FormatError,
    SelfLoopError,
    VertexRangeError,
    WeightError,
)

from conftest import random_connected_graph


class TestValidateGraph:
    def test_minimal_connected(self):
        g = fz.validate_graph(2, [(0, 1)])
        assert g.vertex_count == 2
        assert g.edge_count == 1

    def test_triangle(self):
        g = fz.validate_graph(3, [(0, 1), (1, 2), (0, 2)])
        assert g.edge_count == 3

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            fz.validate_graph(3, [(0, 1)])

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            fz.validate_graph(2, [(0, 0)])

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdgeError):
            fz.validate_graph(2, [(0, 1), (1, 0)])

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexRangeError):
            fz.validate_graph(2, [(0, 2)])

    def test_single_vertex_no_edges(self):
        g = fz.validate_graph(1, [])
        assert g.vertex_count == 1 and g.edge_count == 0

    def test_unchecked_allows_disconnected(self):
        g = fz.Graph.unchecked(3, [(0, 1)])
        assert g.vertex_count == 3


class TestConnectedComponents:
    def test_empty_subset_gives_singletons(self, fixtures):
        tri = fixtures["triangle"].graph
        p = fz.connected_components(tri, [])
        assert p.region_count == 3

    def test_single_edge_merges(self, fixtures):
        tri = fixtures["triangle"].graph
        p = fz.connected_components(tri, [0])
        assert p.region_count == 2
        assert p.labels[0] == p.labels[1] != p.labels[2]

    def test_all_edges_connect(self, fixtures):
        tri = fixtures["triangle"].graph
        assert fz.connected_components(tri).region_count == 1

    def test_canonical_labels_deterministic(self, fixtures):
        tri = fixtures["triangle"].graph
        p1 = fz.connected_components(tri, [1])
        p2 = fz.connected_components(tri, [1])
        assert np.array_equal(p1.labels, p2.labels)
        # region of vertex 0 gets label 0
        assert p1.labels[0] == 0

    def test_subset_monotone_refinement(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            g, _ = random_connected_graph(rng, n_max=10)
            m = g.edge_count
            small = rng.permutation(m)[: int(rng.integers(0, m + 1))]
            grow = np.union1d(
                small, rng.permutation(m)[: int(rng.integers(0, m + 1))]
            )
            fine = fz.connected_components(g, small)
            coarse = fz.connected_components(g, grow)
            assert fz.refines(fine, coarse)


class TestRefines:
    def test_singletons_refine_all(self):
        s = fz.Partition([0, 1, 2])
        p = fz.Partition([0, 0, 1])
        assert fz.refines(s, p)

    def test_reflexive(self):
        p = fz.Partition([0, 0, 1])
        assert fz.refines(p, p)

    def test_crossing_regions(self):
        assert not fz.refines(fz.Partition([0, 0, 1]), fz.Partition([0, 1, 1]))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            fz.refines(fz.Partition([0, 1]), fz.Partition([0, 1, 2]))


class TestCut:
    def test_singletons_cut_everything(self, fixtures):
        tri = fixtures["triangle"].graph
        assert list(fz.cut(fz.Partition([0, 1, 2]), tri)) == [0, 1, 2]

    def test_whole_set_cuts_nothing(self, fixtures):
        tri = fixtures["triangle"].graph
        assert len(fz.cut(fz.Partition([0, 0, 0]), tri)) == 0

    def test_boundary_of_one_region(self, fixtures):
        tri = fixtures["triangle"].graph  # edges 01, 12, 02
        got = list(fz.cut(fz.Partition([0, 0, 1]), tri))
        assert got == [1, 2]

    def test_mismatch(self, fixtures):
        with pytest.raises(ValueError):
            fz.cut(fz.Partition([0, 1]), fixtures["triangle"].graph)


class TestNormalizeWeights:
    def test_order_statistics(self):
        g = fz.Graph(3, [(0, 1), (1, 2), (0, 2)])
        wm = fz.normalize_weights(g, [5.0, 2.5, 9.0])
        assert list(wm.rank) == [1, 0, 2]

    def test_ties_collapse(self):
        g = fz.Graph(3, [(0, 1), (1, 2), (0, 2)])
        wm = fz.normalize_weights(g, [3, 3, 3])
        assert list(wm.rank) == [0, 0, 0]
        assert wm.rank_count == 1

    def test_already_dense(self):
        g = fz.Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert list(fz.normalize_weights(g, [0, 1, 2]).rank) == [0, 1, 2]

    @pytest.mark.parametrize("bad", [[-1.0, 0], [np.nan, 0], [np.inf, 0]])
    def test_invalid_weights(self, bad):
        g = fz.Graph(2, [(0, 1)])
        with pytest.raises(WeightError):
            fz.normalize_weights(g, np.array(bad[:1]))

    def test_length_mismatch(self):
        g = fz.Graph(2, [(0, 1)])
        with pytest.raises(WeightError):
            fz.normalize_weights(g, [1.0, 2.0])

    @given(
        st.lists(
            st.floats(min_value=0, max_value=1e9, allow_nan=False),
            min_size=1,
            max_size=30,
        )
    )
    @settings(max_examples=80, deadline=None)
    def test_rank_order_isomorphic_and_idempotent(self, raws):
        n = len(raws) + 1
        g = fz.Graph(n, [(i, i + 1) for i in range(n - 1)])
        wm = fz.normalize_weights(g, raws)
        raw = np.asarray(raws)
        # order isomorphism over all pairs
        lt = raw[:, None] < raw[None, :]
        rlt = wm.rank[:, None] < wm.rank[None, :]
        assert (lt == rlt).all()
        # dense prefix
        assert set(wm.rank.tolist()) == set(range(wm.rank_count))
        # idempotent on its own ranks
        again = fz.normalize_weights(g, wm.rank.astype(float))
        assert np.array_equal(again.rank, wm.rank)


class TestGraphTextFormat:
    def test_round_trip(self, fixtures):
        f = fixtures["cycle4"]
        text = fz.format_graph_text(f.graph, f.weight_map)
        g2, wm2 = fz.parse_graph_text(text)
        assert g2 == f.graph
        assert np.array_equal(wm2.raw, f.weight_map.raw)

    def test_comments_and_blank_lines(self):
        text = "# a graph\n2 1\n\n0 1 3.5  # an edge\n"
        g, wm = fz.parse_graph_text(text)
        assert g.edge_count == 1
        assert wm.raw[0] == 3.5

    def test_malformed_header(self):
        with pytest.raises(FormatError):
            fz.parse_graph_text("2\n0 1 1\n")

    def test_wrong_edge_count(self):
        with pytest.raises(FormatError):
            fz.parse_graph_text("2 2\n0 1 1\n")

    def test_deterministic_output(self, fixtures):
        f = fixtures["triangle"]
        a = fz.format_graph_text(f.graph, f.weight_map)
        b = fz.format_graph_text(f.graph, f.weight_map)
        assert a == b

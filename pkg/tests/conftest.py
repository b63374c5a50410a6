"""Shared fixtures and random-graph corpus generation."""

import numpy as np
import pytest

import flatzones as fz
from flatzones import oracle


@pytest.fixture(scope="session")
def fixtures():
    return oracle.standard_fixtures()


def random_connected_graph(rng, n_min=2, n_max=16, tie_prob=0.5):
    """Random connected graph with random density and weights.

    A random attachment tree guarantees connectivity; extra edges are
    drawn uniformly. Half of the maps use small-integer raw weights so
    ties are common.
    """
    n = int(rng.integers(n_min, n_max + 1))
    pairs = []
    seen = set()
    for v in range(1, n):
        u = int(rng.integers(0, v))
        pairs.append((u, v))
        seen.add((u, v))
    candidates = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in seen
    ]
    if candidates:
        rng.shuffle(candidates)
        extra = int(rng.integers(0, len(candidates) + 1))
        pairs.extend(candidates[:extra])
    perm = rng.permutation(len(pairs))
    pairs = [pairs[i] for i in perm]
    graph = fz.Graph(n, pairs)
    if rng.random() < tie_prob:
        top = max(2, graph.edge_count // 2 + 1)
        raw = rng.integers(0, top, size=graph.edge_count).astype(np.float64)
    else:
        raw = rng.random(graph.edge_count) * 10.0
    return graph, fz.normalize_weights(graph, raw)


@pytest.fixture(scope="session")
def corpus_1000():
    """The shared 1000-graph corpus used by the acceptance criteria."""
    rng = np.random.default_rng(20240817)
    return [random_connected_graph(rng) for _ in range(1000)]

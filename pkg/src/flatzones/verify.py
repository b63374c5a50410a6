"""Property battery over a single weighted graph.

Runs every representation-equivalence property the library promises on
one input and reports them individually, so a reviewer can reproduce
the checks with one command per graph. Enumeration-backed checks only
run on graphs small enough for the oracles and report as skipped
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import oracle
from .graph import Graph, WeightMap, normalize_weights
from .hierarchy import hierarchy_equal, partition_at, qfz
from .mst import check_mst_via_qfz, kruskal, total_weight
from .saliency import psi


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool | None  # None means skipped
    detail: str = ""

    @property
    def status(self) -> str:
        if self.passed is None:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"


def run_checks(graph: Graph, weight_map: WeightMap) -> list[CheckResult]:
    results = []
    base = qfz(graph, weight_map)
    sal = psi(graph, weight_map)
    sal_wm = normalize_weights(graph, sal.values.astype(np.float64))

    results.append(
        CheckResult(
            "saliency map induces the original hierarchy",
            hierarchy_equal(qfz(graph, sal_wm), base),
        )
    )
    results.append(
        CheckResult(
            "saliency opening is idempotent",
            bool(np.array_equal(psi(graph, sal_wm).values, sal.values)),
        )
    )
    results.append(
        CheckResult(
            "saliency opening is anti-extensive on ranks",
            bool((sal.values <= weight_map.rank).all()),
        )
    )
    try:
        violators = oracle.minimality_probe(graph, sal)
        results.append(
            CheckResult(
                "saliency map is minimal (unit decrements change the hierarchy)",
                not violators,
                f"violating edges: {violators}" if violators else "",
            )
        )
    except ValueError as exc:
        results.append(
            CheckResult(
                "saliency map is minimal (unit decrements change the hierarchy)",
                False,
                str(exc),
            )
        )

    tree = kruskal(graph, weight_map)
    results.append(
        CheckResult(
            "minimum spanning tree preserves the hierarchy",
            hierarchy_equal(qfz(graph, weight_map, tree.edge_indices), base),
        )
    )
    results.append(
        CheckResult(
            "hierarchy checker accepts the minimum spanning tree",
            check_mst_via_qfz(graph, weight_map, tree),
        )
    )

    if graph.vertex_count <= oracle.SMALL_GRAPH_LIMIT:
        naive = oracle.qfz_naive(graph, weight_map)
        ok = all(
            partition_at(base, level) == naive[level]
            for level in range(graph.edge_count + 1)
        )
        results.append(CheckResult("hierarchy matches level-set reference", ok))
        results.append(
            CheckResult(
                "saliency matches cut-scan reference",
                list(sal.values) == oracle.saliency_naive(graph, naive),
            )
        )
    else:
        results.append(CheckResult("hierarchy matches level-set reference", None))
        results.append(CheckResult("saliency matches cut-scan reference", None))

    if graph.vertex_count <= oracle.ENUMERATION_LIMIT:
        trees = oracle.spanning_tree_enumerate(graph, weight_map)
        best = min(weight for _, weight in trees)
        ok = abs(total_weight(tree, weight_map) - best) < 1e-9
        results.append(
            CheckResult("spanning sweep weight matches exhaustive minimum", ok)
        )
    else:
        results.append(
            CheckResult("spanning sweep weight matches exhaustive minimum", None)
        )
    return results

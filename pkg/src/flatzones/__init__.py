"""Connected hierarchies of partitions over edge-weighted graphs.

Three interchangeable representations of the same object: the
quasi-flat zone dendrogram of a weighted graph, its saliency map, and
its minimum spanning trees. Construction is near-linear; conversions
between the representations and checkers for their characteristic
properties are provided, together with pixel-graph ingestion for
images and interpixel rendering of saliency maps.
"""

from .errors import (
    DisconnectedGraphError,
    DuplicateEdgeError,
    FormatError,
    GraphError,
    SelfLoopError,
    VertexRangeError,
    WeightError,
)
from .graph import (
    Graph,
    Partition,
    WeightMap,
    connected_components,
    cut,
    edge_set,
    format_graph_text,
    normalize_weights,
    parse_graph_text,
    refines,
    validate_graph,
)
from .hierarchy import (
    Dendrogram,
    HierarchyView,
    from_partition_sequence,
    hierarchy_equal,
    level_partition,
    partition_at,
    qfz,
)
from .mst import (
    SpanningSubgraph,
    check_mst_via_qfz,
    format_edge_indices,
    kruskal,
    parse_edge_indices,
    total_weight,
)
from .pixelio import (
    GrayImage,
    PixelGraphMeta,
    image_to_graph,
    interpixel_values,
    read_pgm,
    render_saliency,
    write_pgm,
)
from .saliency import (
    LCAIndex,
    SaliencyMap,
    build_lca,
    is_saliency_map,
    psi,
    saliency_of_hierarchy,
    saliency_via_lca,
)

__version__ = "0.1.0"

__all__ = [
    "DisconnectedGraphError",
    "DuplicateEdgeError",
    "FormatError",
    "GraphError",
    "SelfLoopError",
    "VertexRangeError",
    "WeightError",
    "Graph",
    "Partition",
    "WeightMap",
    "connected_components",
    "cut",
    "edge_set",
    "format_graph_text",
    "normalize_weights",
    "parse_graph_text",
    "refines",
    "validate_graph",
    "Dendrogram",
    "HierarchyView",
    "from_partition_sequence",
    "hierarchy_equal",
    "level_partition",
    "partition_at",
    "qfz",
    "SpanningSubgraph",
    "check_mst_via_qfz",
    "format_edge_indices",
    "kruskal",
    "parse_edge_indices",
    "total_weight",
    "GrayImage",
    "PixelGraphMeta",
    "image_to_graph",
    "interpixel_values",
    "read_pgm",
    "render_saliency",
    "write_pgm",
    "LCAIndex",
    "SaliencyMap",
    "build_lca",
    "is_saliency_map",
    "psi",
    "saliency_of_hierarchy",
    "saliency_via_lca",
]

"""Command-line surface.

Verbs compose the library pipelines over plain files: build hierarchies
and saliency maps from weighted-graph text files, convert images to
pixel graphs, render saliency maps as interpixel images, and run the
property battery. Exit codes: 0 success, 1 a check answered "no",
2 parse, I/O, or validation failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import FormatError
from .graph import format_graph_text, format_weight, parse_graph_text
from .hierarchy import Dendrogram, qfz
from .mst import check_mst_via_qfz, format_edge_indices, kruskal, parse_edge_indices
from .pixelio import image_to_graph, read_pgm, render_saliency, write_pgm
from .saliency import is_saliency_map, psi, saliency_of_hierarchy
from .verify import run_checks


def _read_text(path):
    return Path(path).read_text(encoding="ascii")


def _read_graph(path):
    return parse_graph_text(_read_text(path))


def _write(path, text):
    Path(path).write_text(text, encoding="ascii", newline="")


def _cmd_qfz(args):
    graph, weights = _read_graph(args.graph)
    _write(args.output, qfz(graph, weights).to_text())
    return 0


def _cmd_saliency(args):
    graph, _ = _read_graph(args.graph)
    dendrogram = Dendrogram.from_text(
        _read_text(args.dendrogram), level_bound=graph.edge_count
    )
    values = saliency_of_hierarchy(dendrogram, graph).values
    _write(args.output, format_graph_text(graph, values))
    return 0


def _cmd_psi(args):
    graph, weights = _read_graph(args.graph)
    values = psi(graph, weights).values
    _write(args.output, format_graph_text(graph, values))
    return 0


def _cmd_check_saliency(args):
    graph, weights = _read_graph(args.graph)
    if is_saliency_map(graph, weights):
        print("saliency map: yes")
        return 0
    print("saliency map: no")
    return 1


def _cmd_mst(args):
    graph, weights = _read_graph(args.graph)
    tree = kruskal(graph, weights)
    if args.as_graph:
        sub_pairs = graph.edges[tree.edge_indices]
        sub_weights = weights.raw[tree.edge_indices]
        lines = [f"{graph.vertex_count} {len(sub_pairs)}"]
        for (x, y), w in zip(sub_pairs.tolist(), sub_weights.tolist()):
            lines.append(f"{x} {y} {format_weight(w)}")
        _write(args.output, "\n".join(lines) + "\n")
    else:
        _write(args.output, format_edge_indices(tree))
    return 0


def _cmd_check_mst(args):
    graph, weights = _read_graph(args.graph)
    candidate = parse_edge_indices(graph, _read_text(args.tree))
    if check_mst_via_qfz(graph, weights, candidate):
        print("minimum spanning tree: yes")
        return 0
    print("minimum spanning tree: no")
    return 1


def _cmd_image_graph(args):
    image = read_pgm(Path(args.image).read_bytes())
    graph, weights, _ = image_to_graph(image, adjacency=args.adjacency)
    _write(args.output, format_graph_text(graph, weights))
    return 0


def _cmd_render(args):
    image = read_pgm(Path(args.image).read_bytes())
    graph, _, meta = image_to_graph(image, adjacency=4)
    sal_graph, sal_weights = parse_graph_text(_read_text(args.saliency))
    if sal_graph != graph:
        raise FormatError("saliency file does not match the image's pixel graph")
    values = sal_weights.raw.astype(int)
    rendered = render_saliency(values, meta)
    peak = int(values.max()) if len(values) else 0
    fmt = args.format.upper()
    comment = f"saliency-max {peak}" if fmt == "P2" else None
    Path(args.output).write_bytes(write_pgm(rendered, fmt, comment=comment))
    return 0


def _cmd_verify(args):
    graph, weights = _read_graph(args.graph)
    results = run_checks(graph, weights)
    failed = False
    for r in results:
        line = f"{r.status} {r.name}"
        if r.detail:
            line += f" ({r.detail})"
        print(line)
        failed = failed or r.passed is False
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="flatzones",
        description="Hierarchies, saliency maps, and spanning trees over weighted graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("qfz", help="write the dendrogram of a weighted graph")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_qfz)

    p = sub.add_parser("saliency", help="saliency map of a stored dendrogram")
    p.add_argument("graph")
    p.add_argument("dendrogram")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_saliency)

    p = sub.add_parser("psi", help="saliency map of the weights themselves")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_psi)

    p = sub.add_parser("check-saliency", help="exit 0 iff the weights are a saliency map")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_check_saliency)

    p = sub.add_parser("mst", help="write a minimum spanning tree")
    p.add_argument("graph")
    p.add_argument("-o", "--output", required=True)
    p.add_argument(
        "--as-graph",
        action="store_true",
        help="write a graph file restricted to the tree instead of edge indices",
    )
    p.set_defaults(func=_cmd_mst)

    p = sub.add_parser("check-mst", help="exit 0 iff the edge list is a minimum spanning tree")
    p.add_argument("graph")
    p.add_argument("tree")
    p.set_defaults(func=_cmd_check_mst)

    p = sub.add_parser("image-graph", help="pixel adjacency graph of a PGM image")
    p.add_argument("image")
    p.add_argument("--adjacency", type=int, choices=(4, 8), default=4)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_image_graph)

    p = sub.add_parser("render", help="interpixel image of a saliency file")
    p.add_argument("image")
    p.add_argument("saliency")
    p.add_argument("--format", choices=("p2", "p5"), default="p5")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="run the property battery on one input")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

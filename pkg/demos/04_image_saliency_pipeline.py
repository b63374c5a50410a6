"""End-to-end image pipeline: PGM in, interpixel saliency out.

Synthesizes a blocky test image, turns it into a 4-adjacency gradient
graph, computes its saliency map, and writes both the input and the
interpixel rendering as PGM files under demos/out/. Strong region
boundaries show up bright; texture inside regions stays dark.
"""

from pathlib import Path

import numpy as np

import flatzones as fz
from flatzones.pixelio import GrayImage


def synthetic_image(side=96, seed=4):
    rng = np.random.default_rng(seed)
    px = np.zeros((side, side), dtype=np.int64)
    px[:, : side // 2] = 60
    px[:, side // 2 :] = 180
    px[side // 3 : 2 * side // 3, side // 4 : 3 * side // 4] = 120
    px += rng.integers(-8, 9, size=(side, side))
    return GrayImage(side, side, 255, np.clip(px, 0, 255))


def main():
    out_dir = Path(__file__).parent / "out"
    out_dir.mkdir(exist_ok=True)

    image = synthetic_image()
    (out_dir / "input.pgm").write_bytes(fz.write_pgm(image, "P5"))
    print(f"input image: {image.width}x{image.height}, maxval {image.maxval}")

    graph, weights, meta = fz.image_to_graph(image, adjacency=4)
    print(f"pixel graph: {graph.vertex_count} vertices, {graph.edge_count} edges,"
          f" {weights.rank_count} distinct gradient values")

    sal = fz.psi(graph, weights)
    print(f"saliency: max value {int(sal.values.max())},"
          f" zero on {(sal.values == 0).mean():.0%} of edges")

    rendered = fz.render_saliency(sal.values, meta)
    (out_dir / "saliency.pgm").write_bytes(
        fz.write_pgm(rendered, "P2", comment=f"saliency-max {int(sal.values.max())}")
    )
    print(f"wrote {out_dir / 'input.pgm'} and {out_dir / 'saliency.pgm'}"
          f" ({rendered.width}x{rendered.height})")

    # the same pipeline through the command line:
    #   flatzones image-graph input.pgm --adjacency 4 -o g.txt
    #   flatzones psi g.txt -o s.txt
    #   flatzones render input.pgm s.txt -o saliency.pgm


if __name__ == "__main__":
    main()

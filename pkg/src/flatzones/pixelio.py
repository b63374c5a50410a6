"""Grayscale image ingestion and interpixel saliency rendering.

Images become pixel adjacency graphs: vertex id = row * width + col,
edge weight = absolute intensity difference. Edges are laid out in
deterministic passes over the raster: all right-neighbor edges first,
then all down-neighbor edges (8-adjacency appends the down-right and
down-left diagonal passes). Saliency values over a 4-adjacency graph
render as an interpixel image of size (2w-1) x (2h-1), with edge
values sitting between the pixel positions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import FormatError
from .graph import Graph, normalize_weights, _frozen

MAX_MAXVAL = 65535


@dataclass(frozen=True)
class GrayImage:
    """Rectangular grid of intensities in [0, maxval]."""

    width: int
    height: int
    maxval: int
    pixels: np.ndarray  # shape (height, width), row-major

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise FormatError("image dimensions must be positive")
        if not 1 <= self.maxval <= MAX_MAXVAL:
            raise FormatError(f"maxval must lie in 1..{MAX_MAXVAL}")
        px = np.asarray(self.pixels, dtype=np.int64)
        if px.shape != (self.height, self.width):
            raise FormatError("pixel grid does not match the declared size")
        if px.size and (px.min() < 0 or px.max() > self.maxval):
            raise FormatError("pixel value outside [0, maxval]")
        object.__setattr__(self, "pixels", _frozen(px))

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.maxval == other.maxval
            and np.array_equal(self.pixels, other.pixels)
        )


@dataclass(frozen=True)
class PixelGraphMeta:
    """Shape and adjacency of a pixel graph; needed to map edge indices
    back to raster positions."""

    width: int
    height: int
    adjacency: int
    degenerate: bool = False  # single-pixel image, no edges

    @property
    def edge_count(self) -> int:
        w, h = self.width, self.height
        straight = 2 * w * h - w - h
        if self.adjacency == 4:
            return straight
        return straight + 2 * (w - 1) * (h - 1)


# ---------------------------------------------------------------------------
# PNM parsing and writing
# ---------------------------------------------------------------------------

def _tokenize_header(data, count):
    """Yield `count` whitespace-separated tokens, honoring '#' comments,
    and return the offset one whitespace byte past the last token."""
    tokens = []
    i = 0
    n = len(data)
    while len(tokens) < count:
        while i < n and data[i : i + 1].isspace():
            i += 1
        if i < n and data[i : i + 1] == b"#":
            while i < n and data[i] != 0x0A:
                i += 1
            continue
        if i >= n:
            raise FormatError("truncated header")
        start = i
        while i < n and not data[i : i + 1].isspace() and data[i : i + 1] != b"#":
            i += 1
        tokens.append(data[start:i])
    if i < n and data[i : i + 1].isspace():
        i += 1
    return tokens, i


def read_pgm(data: bytes) -> GrayImage:
    """Decode a P2 (ASCII) or P5 (binary) PGM payload."""
    if not isinstance(data, (bytes, bytearray)):
        raise FormatError("expected bytes")
    data = bytes(data)
    (magic,), _ = _tokenize_header(data, 1)
    if magic not in (b"P2", b"P5"):
        raise FormatError(f"unsupported magic {magic!r} (only P2 and P5)")
    tokens, offset = _tokenize_header(data, 4)
    try:
        width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    except ValueError:
        raise FormatError("header fields must be integers") from None
    if maxval < 1 or maxval > MAX_MAXVAL:
        raise FormatError(f"maxval {maxval} outside 1..{MAX_MAXVAL}")
    count = width * height
    if magic == b"P5":
        sample_bytes = 2 if maxval > 255 else 1
        body = data[offset : offset + count * sample_bytes]
        if len(body) < count * sample_bytes:
            raise FormatError("truncated binary pixel data")
        dtype = ">u2" if sample_bytes == 2 else np.uint8
        pixels = np.frombuffer(body, dtype=dtype).astype(np.int64)
    else:
        text = data[offset:]
        fields = []
        for line in text.split(b"\n"):
            body = line.split(b"#", 1)[0]
            fields.extend(body.split())
        if len(fields) < count:
            raise FormatError("truncated ASCII pixel data")
        try:
            pixels = np.array([int(f) for f in fields[:count]], dtype=np.int64)
        except ValueError:
            raise FormatError("non-integer ASCII pixel value") from None
    return GrayImage(width, height, maxval, pixels.reshape(height, width))


def write_pgm(image: GrayImage, fmt="P5", comment=None) -> bytes:
    """Encode deterministically: single-space separators, LF newlines.

    No comments are written unless `comment` is given, in which case a
    single '# ...' line follows the magic number (readers skip it; the
    renderer uses it to record the unscaled saliency maximum).
    """
    fmt = fmt.upper()
    if fmt not in ("P2", "P5"):
        raise FormatError(f"unsupported output format {fmt!r}")
    header = f"{fmt}\n"
    if comment is not None:
        if "\n" in comment:
            raise FormatError("comment must be a single line")
        header += f"# {comment}\n"
    header += f"{image.width} {image.height}\n{image.maxval}\n"
    out = header.encode("ascii")
    if fmt == "P5":
        dtype = ">u2" if image.maxval > 255 else np.uint8
        return out + image.pixels.astype(dtype).tobytes()
    rows = "\n".join(
        " ".join(str(v) for v in row) for row in image.pixels.tolist()
    )
    return out + (rows + "\n").encode("ascii")


# ---------------------------------------------------------------------------
# Pixel graphs
# ---------------------------------------------------------------------------

def image_to_graph(image: GrayImage, adjacency=4):
    """Build the adjacency graph of an image with gradient weights.

    Returns (Graph, WeightMap, PixelGraphMeta). The weight of an edge
    is the absolute intensity difference of its two pixels. A 1x1
    image yields a single-vertex graph with no edges and a warning.
    """
    if adjacency not in (4, 8):
        raise ValueError("adjacency must be 4 or 8")
    w, h = image.width, image.height
    px = image.pixels
    ids = np.arange(w * h, dtype=np.int64).reshape(h, w)
    pairs = []
    weights = []
    right_x = ids[:, :-1].ravel()
    pairs.append(np.stack([right_x, right_x + 1], axis=1))
    weights.append(np.abs(px[:, 1:] - px[:, :-1]).ravel())
    down_x = ids[:-1, :].ravel()
    pairs.append(np.stack([down_x, down_x + w], axis=1))
    weights.append(np.abs(px[1:, :] - px[:-1, :]).ravel())
    if adjacency == 8:
        dr_x = ids[:-1, :-1].ravel()
        pairs.append(np.stack([dr_x, dr_x + w + 1], axis=1))
        weights.append(np.abs(px[1:, 1:] - px[:-1, :-1]).ravel())
        dl_x = ids[:-1, 1:].ravel()
        pairs.append(np.stack([dl_x, dl_x + w - 1], axis=1))
        weights.append(np.abs(px[1:, :-1] - px[:-1, 1:]).ravel())
    edge_pairs = np.concatenate(pairs)
    raw = np.concatenate(weights).astype(np.float64)
    degenerate = len(edge_pairs) == 0
    if degenerate:
        warnings.warn("1x1 image produces a single-vertex graph with no edges")
    graph = Graph(w * h, edge_pairs)
    meta = PixelGraphMeta(w, h, adjacency, degenerate)
    return graph, normalize_weights(graph, raw), meta


def interpixel_values(saliency_values, meta: PixelGraphMeta) -> np.ndarray:
    """Unscaled interpixel grid of a 4-adjacency saliency map.

    Pixel positions carry 0, inter-pixel positions carry the saliency
    of the corresponding edge, and each (odd, odd) corner carries the
    maximum of its up-to-four inter-pixel neighbors so that region
    boundaries stay visually closed.
    """
    if meta.adjacency != 4:
        raise ValueError("interpixel rendering is defined for 4-adjacency only")
    values = np.asarray(saliency_values, dtype=np.int64)
    if len(values) != meta.edge_count:
        raise ValueError(
            f"expected {meta.edge_count} saliency values, got {len(values)}"
        )
    w, h = meta.width, meta.height
    grid = np.zeros((2 * h - 1, 2 * w - 1), dtype=np.int64)
    n_right = h * (w - 1)
    if w > 1:
        grid[0::2, 1::2] = values[:n_right].reshape(h, w - 1)
    if h > 1:
        grid[1::2, 0::2] = values[n_right:].reshape(h - 1, w)
    if w > 1 and h > 1:
        up = grid[0:-2:2, 1::2]
        down = grid[2::2, 1::2]
        left = grid[1::2, 0:-2:2]
        right = grid[1::2, 2::2]
        grid[1::2, 1::2] = np.maximum(np.maximum(up, down), np.maximum(left, right))
    return grid


def render_saliency(saliency_values, meta: PixelGraphMeta, maxval=255) -> GrayImage:
    """Interpixel image of a saliency map, affinely scaled for display.

    The value range [0, max saliency] maps onto [0, maxval] with floor
    scaling; a zero map renders as the all-zero image. The unscaled
    values are recoverable from the scaled image only while the true
    maximum (recorded by the CLI as a header comment) is at most
    maxval.
    """
    grid = interpixel_values(saliency_values, meta)
    peak = int(grid.max()) if grid.size else 0
    if peak > 0:
        grid = (grid * maxval) // peak
    return GrayImage(grid.shape[1], grid.shape[0], maxval, grid)

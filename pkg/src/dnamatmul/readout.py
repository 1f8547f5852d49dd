"""Complete-path selection and product decoding."""

from __future__ import annotations

from typing import Iterable

from .encoding import Encoding
from .errors import UnknownStrandSegment
from .graph import LayeredGraph
from .hybridization import SEPARATOR, Path

ARROW = " -> "


def filter_complete_paths(paths: Iterable[Path], graph: LayeredGraph) -> frozenset[Path]:
    """Paths running from the initial layer to the terminal layer."""
    last = graph.chain_length
    return frozenset(p for p in paths if p.first.layer == 0 and p.last.layer == last)


def decode_path(strand_text: str, encoding: Encoding) -> list[str]:
    """Labels of the vertex strands making up a rendered path strand.

    The text must be ``strand_length``-long segments joined by single
    separators; any segment that is not a known vertex strand raises
    :class:`UnknownStrandSegment`.
    """
    n = encoding.strand_length
    stride = n + len(SEPARATOR)
    if (len(strand_text) + len(SEPARATOR)) % stride:
        raise UnknownStrandSegment(
            f"path strand of length {len(strand_text)} is not a whole number of segments"
        )
    labels = []
    for start in range(0, len(strand_text), stride):
        segment = strand_text[start : start + n]
        sep = strand_text[start + n : start + stride]
        if sep and sep != SEPARATOR:
            raise UnknownStrandSegment(f"expected {SEPARATOR!r} at offset {start + n}")
        try:
            v = encoding.strand_to_vertex[segment]
        except KeyError:
            raise UnknownStrandSegment(
                f"segment {segment!r} at offset {start} is not a vertex strand"
            ) from None
        labels.append(encoding.labels[v])
    return labels


def render_labels(labels: Iterable[str]) -> str:
    return ARROW.join(labels)


def decode_product(complete: Iterable[Path], graph: LayeredGraph) -> list[list[int]]:
    rows, cols = graph.layer_sizes[0], graph.layer_sizes[-1]
    product = [[0] * cols for _ in range(rows)]
    for path in complete:
        product[path.first.index][path.last.index] = 1
    return product

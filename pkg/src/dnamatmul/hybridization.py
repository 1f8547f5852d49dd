"""Path assembly: grow path strands by annealing edge strands to vertex tails.

A path strand is extended whenever the last half of its final vertex strand
pairs with the first half of some edge strand; the edge then splints the
edge's destination vertex onto the end.  With collision-free halves this only
ever follows real graph edges.  When two vertices share a half, an edge strand
also anneals to the wrong vertex and spurious paths appear.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from ._backend import get_kernels
from .encoding import Encoding
from .graph import LayeredGraph, VertexId

DEFAULT_PATH_CAP = 1_000_000
SEPARATOR = "-"


@dataclass(frozen=True, order=True, slots=True)
class Path:
    vertices: tuple[VertexId, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def first(self) -> VertexId:
        return self.vertices[0]

    @property
    def last(self) -> VertexId:
        return self.vertices[-1]

    def strand_text(self, encoding: Encoding) -> str:
        return SEPARATOR.join(encoding.vertex_to_strand[v] for v in self.vertices)

    def labels(self, encoding: Encoding) -> list[str]:
        return [encoding.labels[v] for v in self.vertices]


@dataclass(frozen=True)
class _Annealing:
    vertices: list[VertexId]
    table: list[list[int]]
    edge_dest: list[int]

    def successors(self) -> list[list[int]]:
        return [sorted({self.edge_dest[e] for e in row}) for row in self.table]


def _anneal(encoding: Encoding, graph: LayeredGraph, backend: str | None) -> _Annealing:
    kernels = get_kernels(backend)
    half = encoding.half
    vertices = list(graph.vertices())
    ids = {v: i for i, v in enumerate(vertices)}
    tails = "".join(encoding.vertex_to_strand[v][half:] for v in vertices)
    edges = list(encoding.edge_strands)
    heads = "".join(encoding.edge_strands[e][:half] for e in edges)
    table = kernels.hybridization_table(tails.encode("ascii"), heads.encode("ascii"), half)
    return _Annealing(vertices, table, [ids[e[1]] for e in edges])


def assemble_paths_exhaustive(
    encoding: Encoding,
    graph: LayeredGraph,
    *,
    rounds: int | None = None,
    cap: int = DEFAULT_PATH_CAP,
    backend: str | None = None,
) -> frozenset[Path]:
    """Every path strand that can form in ``rounds`` growth rounds.

    Starts from all single-vertex strands and runs ``graph.chain_length``
    rounds unless ``rounds`` is given.  Each round extends every existing path
    by every annealing edge strand, so the round count bounds path length even
    when collisions create cycles.

    Raises :class:`~dnamatmul.errors.PathExplosion` once more than ``cap``
    paths exist.
    """
    if rounds is None:
        rounds = graph.chain_length
    kernels = get_kernels(backend)
    ann = _anneal(encoding, graph, backend)
    parents, verts = kernels.grow_forest(ann.successors(), rounds, cap)
    return frozenset(map(Path, kernels.materialize(parents, verts, ann.vertices)))


def assemble_paths_stochastic(
    encoding: Encoding,
    graph: LayeredGraph,
    trials: int,
    rng: random.Random,
    *,
    backend: str | None = None,
) -> Counter[Path]:
    """Sample ``trials`` random assemblies and return them as a multiset.

    Each trial starts at a uniformly chosen vertex strand and repeatedly picks
    one annealing edge strand uniformly at random, stopping when nothing
    anneals or after ``graph.chain_length`` extensions.
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    ann = _anneal(encoding, graph, backend)
    n = len(ann.vertices)
    max_steps = graph.chain_length
    counts: Counter[tuple[int, ...]] = Counter()
    for _ in range(trials):
        cur = rng.randrange(n)
        walk = [cur]
        for _ in range(max_steps):
            options = ann.table[cur]
            if not options:
                break
            cur = ann.edge_dest[rng.choice(options)]
            walk.append(cur)
        counts[tuple(walk)] += 1
    vs = ann.vertices
    return Counter({Path(tuple(vs[i] for i in seq)): c for seq, c in counts.items()})

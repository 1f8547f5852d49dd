import random
from collections import Counter

import pytest

from dnamatmul import (
    Path,
    assemble_paths_exhaustive,
    assemble_paths_stochastic,
    build_layered_graph,
    encode,
    encoding_from_strands,
    enumerate_paths_dfs,
    synthesize_edge_strands,
    validate_chain,
)
from dnamatmul.errors import PathExplosion

from .conftest import COLLIDING_STRANDS, FOUR_MATRIX_LABELS


def label_paths(paths, enc):
    return {" -> ".join(p.labels(enc)) for p in paths}


@pytest.fixture
def colliding(four_graph):
    enc = encoding_from_strands(four_graph, COLLIDING_STRANDS, "raw", labels=FOUR_MATRIX_LABELS)
    return synthesize_edge_strands(four_graph, enc)


def test_exhaustive_four_chain(four_graph, backend):
    enc = encode(four_graph, 10, "unique-halves", seed=3, labels=FOUR_MATRIX_LABELS)
    paths = assemble_paths_exhaustive(enc, four_graph, backend=backend)
    # two disjoint 5-vertex chains, 15 contiguous subpaths each
    assert len(paths) == 30
    assert {p.vertices for p in paths} == enumerate_paths_dfs(four_graph)
    assert "a -> d -> f -> g -> i" in label_paths(paths, enc)
    for p in paths:
        assert len(p.strand_text(enc)) == len(p) * 10 + len(p) - 1
        assert all(b.layer == a.layer + 1 for a, b in zip(p.vertices, p.vertices[1:]))


def test_exhaustive_zero_edges(backend):
    graph = build_layered_graph(validate_chain([[[0, 0]], [[0], [0]]]))
    enc = encode(graph, 10, seed=1)
    paths = assemble_paths_exhaustive(enc, graph, backend=backend)
    assert {p.vertices for p in paths} == {(v,) for v in graph.vertices()}


# Published listing for the colliding strands: 41 path strands.
COLLIDING_LISTING = {
    "g -> i", "e", "b -> c -> e", "f", "f -> g -> c -> e", "e -> h", "h -> j",
    "c -> e -> h -> j", "a -> d -> f -> g -> i", "g", "b -> c", "a -> d -> f",
    "g -> c", "c", "a -> d -> f -> g -> c", "b -> c -> e -> h -> j", "b", "a",
    "d -> f -> g -> c -> e", "f -> g -> c -> e -> h", "b -> i", "g -> c -> e",
    "f -> g", "c -> e -> h", "h", "a -> d", "g -> c -> e -> h", "d -> f",
    "d -> f -> g -> c", "f -> g -> i", "e -> h -> j", "a -> d -> f -> g",
    "f -> g -> c", "d -> f -> g", "b -> c -> e -> h", "g -> c -> e -> h -> j",
    "i", "d", "c -> e", "j", "d -> f -> g -> i",
}


def test_exhaustive_with_collision(four_graph, colliding, backend):
    paths = assemble_paths_exhaustive(colliding, four_graph, backend=backend)
    names = label_paths(paths, colliding)
    assert len(COLLIDING_LISTING) == 41
    assert names == COLLIDING_LISTING
    # collisions only add paths
    assert enumerate_paths_dfs(four_graph) <= {p.vertices for p in paths}


def test_rounds_bound_path_length(four_graph, colliding, backend):
    # g -> c splices the two chains into a d f g c e h j; no cycle exists
    long = assemble_paths_exhaustive(colliding, four_graph, rounds=7, backend=backend)
    assert "a -> d -> f -> g -> c -> e -> h -> j" in label_paths(long, colliding)
    assert max(len(p) for p in long) == 8
    assert assemble_paths_exhaustive(colliding, four_graph, rounds=12, backend=backend) == long
    assert assemble_paths_exhaustive(colliding, four_graph, rounds=0, backend=backend) == {
        Path((v,)) for v in four_graph.vertices()
    }


def test_rounds_terminate_on_cycles(backend):
    # x and z share the tail GT, so z also anneals to the x -> y splint: y -> z -> y -> ...
    graph = build_layered_graph(validate_chain([[[1]], [[1]]]))
    enc = synthesize_edge_strands(graph, encoding_from_strands(graph, [["ACGT"], ["CCAA"], ["TTGT"]]))
    paths = assemble_paths_exhaustive(enc, graph, rounds=6, backend=backend)
    assert max(len(p) for p in paths) == 7


def test_path_cap(backend):
    dense = [[[1] * 3] * 3] * 5
    graph = build_layered_graph(validate_chain(dense))
    enc = encode(graph, 10, seed=0)
    with pytest.raises(PathExplosion):
        assemble_paths_exhaustive(enc, graph, cap=100, backend=backend)
    with pytest.raises(PathExplosion):
        assemble_paths_exhaustive(enc, graph, cap=5, backend=backend)
    assert len(assemble_paths_exhaustive(enc, graph, backend=backend)) == len(
        enumerate_paths_dfs(graph)
    )


def test_stochastic_zero_edges():
    graph = build_layered_graph(validate_chain([[[0]], [[0]]]))
    enc = encode(graph, 10, seed=1)
    sample = assemble_paths_stochastic(enc, graph, 1, random.Random(0))
    assert sum(sample.values()) == 1
    (path,) = sample
    assert len(path) == 1


def test_stochastic_rejects_zero_trials(four_graph):
    enc = encode(four_graph, 10, seed=1)
    with pytest.raises(ValueError):
        assemble_paths_stochastic(enc, four_graph, 0, random.Random(0))


@pytest.mark.parametrize("seed", range(5))
def test_stochastic_support_within_exhaustive(four_graph, colliding, seed):
    rng = random.Random(seed)
    sample = assemble_paths_stochastic(colliding, four_graph, 500, rng)
    assert isinstance(sample, Counter) and sum(sample.values()) == 500
    assert set(sample) <= assemble_paths_exhaustive(colliding, four_graph)


def test_stochastic_deterministic(four_graph):
    enc = encode(four_graph, 10, seed=11)
    a = assemble_paths_stochastic(enc, four_graph, 300, random.Random(4))
    b = assemble_paths_stochastic(enc, four_graph, 300, random.Random(4))
    assert a == b

import random

import pytest

from dnamatmul import build_layered_graph, validate_chain
from dnamatmul._backend import AVAILABLE

FOUR_MATRIX_CHAIN = [
    [[0, 1], [1, 0]],
    [[1, 0], [0, 1]],
    [[0, 1], [1, 0]],
    [[1, 0], [0, 1]],
]
FOUR_MATRIX_LABELS = [["a", "b"], ["c", "d"], ["e", "f"], ["g", "h"], ["i", "j"]]

# Vertex strands of a published run in which b and g share the half GACAG.
COLLIDING_STRANDS = [
    ["ATTCGTTCTT", "TCTTGGACAG"],
    ["GCACAGTTAA", "ATCACACAAT"],
    ["GCCCTTCTGG", "TAAAACGGCT"],
    ["GCTTGGACAG", "CTCAGTGAGC"],
    ["GTCATGAGCG", "ATGAACGGTG"],
]

SWAP = [[0, 1], [1, 0]]


@pytest.fixture
def four_chain():
    return validate_chain(FOUR_MATRIX_CHAIN)


@pytest.fixture
def four_graph(four_chain):
    return build_layered_graph(four_chain)


@pytest.fixture(params=sorted(AVAILABLE))
def backend(request):
    return request.param


def random_chain(rng: random.Random, max_dim=4, min_len=2, max_len=5, density=0.5):
    """Compatible chain with dimensions in 1..max_dim and entries ~ Bernoulli(density)."""
    length = rng.randint(min_len, max_len)
    dims = [rng.randint(1, max_dim) for _ in range(length + 1)]
    return [
        [[int(rng.random() < density) for _ in range(dims[m + 1])] for _ in range(dims[m])]
        for m in range(length)
    ]


_acceptance_lines: list[str] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        status = "PASS" if report.passed else "FAIL"
        doc = report.nodeid.split("::")[-1]
        _acceptance_lines.append(f"{status}  {doc}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)

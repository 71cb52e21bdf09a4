import numpy as np
import pytest

from core.graph import Graph
from core.linear_code import GenMatrix

HAMMING_ROWS = ["1000011", "0100101", "0010110", "0001111"]
# Hamming 图在边 {2,7} 上做 ELC 并交换回来之后的生成矩阵
HAMMING_PIVOTED_ROWS = ["1000111", "0100101", "0010110", "0001011"]


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def hamming():
    return GenMatrix.from_strings(HAMMING_ROWS)


@pytest.fixture
def hamming_pivoted():
    return GenMatrix.from_strings(HAMMING_PIVOTED_ROWS)


@pytest.fixture
def hamming_graph():
    edges = [(1, 6), (1, 7), (2, 5), (2, 7), (3, 5), (3, 6), (4, 5), (4, 6), (4, 7)]
    return Graph.from_edges(7, [(u - 1, v - 1) for u, v in edges])


@pytest.fixture
def path4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def cycle4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k2():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def rng():
    return np.random.default_rng(20071)

"""
Shared fixtures
"""

import pytest

from motifs.catalog import build_catalog
from network.digraph import Digraph
from network.rng import RngStream


@pytest.fixture
def rng():
    return RngStream(12345)


@pytest.fixture(scope='session')
def catalog3():
    return build_catalog(3)


@pytest.fixture(scope='session')
def catalog4():
    return build_catalog(4)


@pytest.fixture
def cycle3():
    """Directed 3-cycle 0 -> 1 -> 2 -> 0"""
    return Digraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def two_cliques():
    """Two disjoint complete 5-node digraphs"""
    edges = [(a, b) for block in (range(5), range(5, 10)) for a in block for b in block if a != b]
    return Digraph.from_edges(10, edges)

"""
Deterministic connection strategies for many empty three-node motifs

Both strategies give every node exactly K inputs.

intra: nodes 0..K form a fully bidirected cluster; every other node takes its
       inputs from nodes 0..K-1.
inter: nodes 0..K-1 project to every node K..N-1, and nodes K..2K-1
       project back to nodes 0..K-1.
"""

import numpy as np
from scipy.special import comb

from network.digraph import Digraph
from utils.errors import StrategyError

INTRA = 'intra'
INTER = 'inter'
STRATEGIES = (INTRA, INTER)


def _check(strategy, n, k):
    if strategy not in STRATEGIES:
        raise StrategyError(f"Unknown strategy {strategy!r}, expected one of {STRATEGIES}")
    if k < 3:
        raise StrategyError(f"Strategies are defined for K >= 3, got K={k}")
    if strategy == INTRA and k + 1 > n:
        raise StrategyError(f"Intra-connectivity needs K+1 <= N, got K={k}, N={n}")
    if strategy == INTER and 2 * k > n:
        raise StrategyError(f"Inter-connectivity needs 2K <= N, got K={k}, N={n}")


def intra_connectivity(n, k):
    _check(INTRA, n, k)
    adjacency = np.zeros((n, n), dtype=bool)
    adjacency[:k + 1, :k + 1] = True
    adjacency[:k, k + 1:] = True
    np.fill_diagonal(adjacency, False)
    return Digraph(adjacency)


def inter_connectivity(n, k):
    _check(INTER, n, k)
    adjacency = np.zeros((n, n), dtype=bool)
    adjacency[:k, k:] = True
    adjacency[k:2 * k, :k] = True
    return Digraph(adjacency)


def build_strategy(strategy, n, k):
    """Construct the intra- or inter-connectivity network"""
    _check(strategy, n, k)
    return intra_connectivity(n, k) if strategy == INTRA else inter_connectivity(n, k)


def empty_motif_count(strategy, n, k):
    """
    Closed-form number of empty three-node motifs

    intra: C(N-K, 3); inter: C(N-K, 3) + C(K, 3)

    Returns:
        int: Exact count
    """
    _check(strategy, n, k)
    count = comb(n - k, 3, exact=True)
    if strategy == INTER:
        count += comb(k, 3, exact=True)
    return int(count)


def rewire_neighborhood(graph, plan=None):
    """
    Every graph obtained by moving the source of exactly one edge

    Edge j -> k becomes j' -> k for each j' that is neither k nor already a
    source of k, so in-degrees are preserved.

    Args:
        graph (Digraph): Starting graph
        plan (DegreePlan): Optional plan the in-degrees must match

    Yields:
        Digraph: One single-source-rewire variant at a time
    """
    if plan is not None and not np.array_equal(graph.in_degrees(), plan.targets):
        raise StrategyError("Graph in-degrees do not match the degree plan")

    adjacency = graph.adjacency
    for source, target in graph.edges():
        free = ~adjacency[:, target]
        free[target] = False
        for alternative in np.flatnonzero(free):
            variant = adjacency.copy()
            variant[source, target] = False
            variant[alternative, target] = True
            yield Digraph(variant)

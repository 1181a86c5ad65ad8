"""
Directed Watts-Strogatz networks
"""

import numpy as np

from network.digraph import Digraph
from utils.errors import StrategyError


def generate_ws_directed(n, k, q, rng):
    """
    Ring lattice with rewired sources

    Node v first takes inputs from v-1, ..., v-K (mod N). Each of these edges
    then keeps its target and, with probability q, gets a new source drawn
    uniformly from nodes that are neither v nor already a source of v.

    Args:
        n (int): Network size
        k (int): Inputs per node, 1 <= K <= N-1
        q (float): Rewiring probability in [0, 1]
        rng (RngStream): Random stream

    Returns:
        Digraph: Network in which every in-degree is exactly K
    """
    if not 1 <= k <= n - 1:
        raise StrategyError(f"Ring degree K must lie in [1, {n - 1}], got {k}")
    if not 0.0 <= q <= 1.0:
        raise StrategyError(f"Rewiring probability must lie in [0, 1], got {q}")

    adjacency = np.zeros((n, n), dtype=bool)
    for v in range(n):
        adjacency[(v - np.arange(1, k + 1)) % n, v] = True

    for v in range(n):
        for d in range(1, k + 1):
            source = (v - d) % n
            if rng.random() >= q:
                continue
            free = ~adjacency[:, v]
            free[v] = False
            candidates = np.flatnonzero(free)
            if candidates.size == 0:
                continue
            adjacency[source, v] = False
            adjacency[candidates[rng.integers(candidates.size)], v] = True
    return Digraph(adjacency)

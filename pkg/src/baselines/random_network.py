"""
Random networks with a prescribed in-degree distribution
"""

import numpy as np

from network.degrees import draw_in_degrees
from network.digraph import Digraph


def generate_random_network(n, spec, rng):
    """
    Random network: every node draws its input count, then picks that many
    distinct sources uniformly among the other N-1 nodes

    Args:
        n (int): Network size
        spec (InDegreeSpec): In-degree distribution
        rng (RngStream): Random stream

    Returns:
        Digraph: Random network
    """
    plan = draw_in_degrees(spec, n, rng)
    adjacency = np.zeros((n, n), dtype=bool)
    nodes = np.arange(n)
    for target, count in enumerate(plan.targets):
        if count == 0:
            continue
        others = np.delete(nodes, target)
        adjacency[rng.choice(others, size=int(count), replace=False), target] = True
    return Digraph(adjacency)

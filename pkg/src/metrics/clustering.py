"""
Local and global clustering coefficients for directed graphs

Each triangle around node i is weighted by the product of its three
undirected multiplicities (M_xy + M_yx), so a fully bidirected triangle counts
8 and the coefficient is normalised by 8 C(m_i, 2), where m_i is the number
of distinct neighbours of i.
"""

import numpy as np


def clustering_coefficients(graph):
    """
    Per-node clustering coefficients

    Args:
        graph (Digraph): Graph to measure

    Returns:
        numpy.ndarray: C_i in [0, 1]; 0 for nodes with fewer than two neighbours
    """
    m = graph.adjacency.astype(np.int64)
    sym = m + m.T
    neighbours = (sym > 0).sum(axis=1)
    # (S^3)_ii counts each unordered neighbour pair twice
    triangles = ((sym @ sym) * sym.T).sum(axis=1) / 2.0
    pairs = neighbours * (neighbours - 1) / 2.0

    coefficients = np.zeros(graph.n)
    defined = neighbours >= 2
    coefficients[defined] = triangles[defined] / (8.0 * pairs[defined])
    return coefficients


def local_clustering(graph, node):
    return float(clustering_coefficients(graph)[node])


def clustering_coefficient(graph):
    """Mean of the local clustering coefficients"""
    return float(clustering_coefficients(graph).mean())

"""
Directed modularity
"""

from dataclasses import dataclass

import numpy as np

from utils.errors import DegenerateMetricError, InvalidSpecError

FULL = 'full'
SIMPLIFIED = 'simplified'


@dataclass(frozen=True)
class ModularityReport:
    Q: float
    partition: object
    variant: str

    def to_dict(self):
        return {'Q': self.Q, 'variant': self.variant, 'partition': self.partition.to_dict()}


def modularity_matrix(graph, variant=FULL):
    """
    Observed minus expected edges, B_ij = M_ij - expected_ij

    The full variant expects m_i^out m_j^in / E edges from i to j; the
    simplified variant expects the mean connection probability E / (N(N-1))
    on every off-diagonal pair and nothing on the diagonal.

    Args:
        graph (Digraph): Graph with at least one edge
        variant (str): 'full' or 'simplified'

    Returns:
        numpy.ndarray: N x N float matrix
    """
    m = graph.adjacency.astype(float)
    edges = m.sum()
    if edges == 0:
        raise DegenerateMetricError("Modularity is undefined for a graph without edges")
    if variant == FULL:
        expected = np.outer(m.sum(axis=1), m.sum(axis=0)) / edges
    elif variant == SIMPLIFIED:
        n = graph.n
        expected = np.full((n, n), edges / (n * (n - 1)))
        np.fill_diagonal(expected, 0.0)
    else:
        raise InvalidSpecError(f"Unknown modularity variant: {variant!r}")
    return m - expected


def modularity(graph, partition, variant=FULL, include_diagonal=True):
    """
    Modularity Q of a partition

    Args:
        graph (Digraph): Graph with at least one edge
        partition (Partition): Node clusters
        variant (str): 'full' or 'simplified'
        include_diagonal (bool): Keep the i = j terms inside each cluster;
            with them a single cluster scores exactly 0

    Returns:
        ModularityReport: Q with the partition and variant
    """
    if partition.n != graph.n:
        raise InvalidSpecError(f"Partition covers {partition.n} nodes, graph has {graph.n}")
    B = modularity_matrix(graph, variant)
    inside = partition.same_cluster()
    if not include_diagonal:
        np.fill_diagonal(inside, False)
    Q = B[inside].sum() / graph.edge_count
    return ModularityReport(Q=float(Q), partition=partition, variant=variant)


def intra_inter_edge_counts(graph, partition):
    """
    Edges inside clusters and edges between clusters

    Returns:
        tuple: (intra, inter)
    """
    inside = partition.same_cluster()
    intra = int(graph.adjacency[inside].sum())
    return intra, graph.edge_count - intra

"""
Harmonic-mean shortest path length
"""

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path


@dataclass(frozen=True)
class PathStats:
    """Harmonic mean L over ordered pairs i != j; unreachable pairs add 0 to the reciprocal sum"""
    L: float
    reachable_pairs: int
    total_pairs: int

    @property
    def is_degenerate(self):
        return not np.isfinite(self.L)

    def to_dict(self):
        return {
            'L': None if self.is_degenerate else self.L,
            'reachable_pairs': self.reachable_pairs,
            'total_pairs': self.total_pairs,
            'degenerate': self.is_degenerate,
        }


def harmonic_path_length(graph):
    """
    Harmonic mean of directed shortest path lengths

    Args:
        graph (Digraph): Graph to measure

    Returns:
        PathStats: L = N(N-1) / sum of 1/d_ij, or +inf when no pair is reachable
    """
    n = graph.n
    distances = shortest_path(csr_matrix(graph.adjacency), directed=True, unweighted=True)
    off_diagonal = ~np.eye(n, dtype=bool)
    reachable = np.isfinite(distances) & off_diagonal

    reciprocal = np.zeros_like(distances)
    reciprocal[reachable] = 1.0 / distances[reachable]
    total = reciprocal.sum()
    pairs = n * (n - 1)
    length = pairs / total if total > 0 else float('inf')
    return PathStats(L=float(length), reachable_pairs=int(reachable.sum()), total_pairs=pairs)

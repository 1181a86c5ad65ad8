"""
Partitioning schemes for modularity evaluation

Hierarchical clustering merges nodes by the Hamming distance of their output
and input patterns (weighted-average linkage, ties to the lowest index pair).
Bisection clustering repeatedly splits the cluster whose split gives the
highest modularity, using a pluggable two-way split heuristic.
"""

import logging

import numpy as np

from network.rng import RngStream
from utils.errors import InvalidSpecError
from .modularity import FULL, modularity, modularity_matrix
from .partition import Partition

logger = logging.getLogger(__name__)


def hamming_distance_matrix(graph):
    """
    Pattern distances d_ij = 1/2 sum over k != i, j of |M_ik - M_jk| + |M_ki - M_kj|

    Args:
        graph (Digraph): Graph to measure

    Returns:
        numpy.ndarray: Symmetric N x N float matrix with zero diagonal
    """
    m = graph.adjacency.astype(np.int64)
    out_deg = m.sum(axis=1)
    in_deg = m.sum(axis=0)
    out_mismatch = out_deg[:, None] + out_deg[None, :] - 2 * (m @ m.T)
    in_mismatch = in_deg[:, None] + in_deg[None, :] - 2 * (m.T @ m)
    # Full-row mismatches also count the columns k = i and k = j
    return 0.5 * (out_mismatch + in_mismatch) - (m + m.T)


def hierarchical_clustering(distances, n_clust):
    """
    Agglomerative clustering down to n_clust clusters

    The closest pair of clusters is merged and the merged cluster's distance
    to every other cluster is the plain average of the two old distances.

    Args:
        distances (array-like): Symmetric N x N distance matrix
        n_clust (int): Number of clusters to stop at, in [1, N]

    Returns:
        Partition: Resulting clusters
    """
    work = np.array(distances, dtype=float)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise InvalidSpecError(f"Distance matrix must be square, got shape {work.shape}")
    n = work.shape[0]
    if not 1 <= n_clust <= n:
        raise InvalidSpecError(f"Cluster count must lie in [1, {n}], got {n_clust}")

    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    active = np.ones(n, dtype=bool)
    representative = np.arange(n)

    for _ in range(n - n_clust):
        candidates = upper & active[:, None] & active[None, :]
        i, j = divmod(int(np.argmin(np.where(candidates, work, np.inf))), n)
        merged = 0.5 * work[i] + 0.5 * work[j]
        work[i, :] = merged
        work[:, i] = merged
        active[j] = False
        representative[representative == j] = i

    return Partition.from_labels(representative)


def greedy_modularity_split(graph, members, rng, restarts=4):
    """
    Two-way split of a cluster by greedy single-node moves

    Starts from random balanced splits and flips the node with the largest
    modularity gain until no flip improves; neither side may become empty.

    Args:
        graph (Digraph): Whole graph
        members (numpy.ndarray): Node ids of the cluster to split
        rng (RngStream): Random stream for the starting splits
        restarts (int): Number of random starts, best kept

    Returns:
        numpy.ndarray: Boolean mask over members, True for the new side
    """
    size = len(members)
    B = modularity_matrix(graph, FULL)
    sub = 0.5 * (B + B.T)[np.ix_(members, members)]
    self_term = np.diag(sub)

    best_side, best_value = None, -np.inf
    for _ in range(restarts):
        spins = np.ones(size)
        spins[rng.permutation(size)[:size // 2]] = -1.0
        for _ in range(10 * size):
            gain = -spins * (sub @ spins - self_term * spins)
            if (spins > 0).sum() == 1:
                gain[spins > 0] = -np.inf
            if (spins < 0).sum() == 1:
                gain[spins < 0] = -np.inf
            node = int(np.argmax(gain))
            if gain[node] <= 1e-12:
                break
            spins[node] = -spins[node]
        value = spins @ sub @ spins
        if value > best_value + 1e-12:
            best_side, best_value = spins > 0, value
    return best_side


def bisection_clustering(graph, n_clust, split_heuristic=greedy_modularity_split, rng=None):
    """
    Iterative bisection into n_clust clusters

    Every step tentatively splits each current cluster with the heuristic and
    applies the split that gives the largest full-variant modularity.

    Args:
        graph (Digraph): Graph with at least one edge
        n_clust (int): Target cluster count, in [1, N]
        split_heuristic (callable): (graph, members, rng) -> boolean side mask
        rng (RngStream): Random stream for the heuristic

    Returns:
        Partition: Resulting clusters
    """
    if not 1 <= n_clust <= graph.n:
        raise InvalidSpecError(f"Cluster count must lie in [1, {graph.n}], got {n_clust}")
    rng = rng or RngStream(0)
    labels = np.zeros(graph.n, dtype=np.int64)

    for step in range(1, n_clust):
        best_q, best_labels = -np.inf, None
        for cluster, members in enumerate(Partition(labels).clusters()):
            if members.size < 2:
                continue
            side = split_heuristic(graph, members, rng.derive(step, cluster))
            proposal = labels.copy()
            proposal[members[side]] = step
            q = modularity(graph, Partition(proposal)).Q
            if q > best_q:
                best_q, best_labels = q, proposal
        labels = best_labels
        logger.debug(f"Bisection step {step}: modularity {best_q:.4f}")

    return Partition.from_labels(labels)

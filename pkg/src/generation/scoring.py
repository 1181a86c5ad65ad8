"""
Candidate-source scoring and target/source selection

For a target k, every eligible source i (i != k, edge i -> k absent) is
scored by summing pre-motif values v = G w over the auxiliary node(s). The
pre-motif codes for all (i, j) or (i, j1, j2) are built at once from the
pair-state matrix P = M + 2 M^T, so a scoring step costs O(N^2) for three-node
motifs and O(N^3) for four-node motifs.
"""

import numpy as np

from network.digraph import Digraph
from utils.errors import GenerationError


class ScoreVector:
    """Per-node scores for one target; scores are NaN where not eligible"""

    def __init__(self, scores, eligible):
        self.scores = scores
        self.eligible = eligible

    @property
    def candidates(self):
        return np.flatnonzero(self.eligible)

    def __getitem__(self, node):
        return float(self.scores[node])


def _adjacency(graph):
    if isinstance(graph, Digraph):
        return graph.adjacency
    return np.asarray(graph, dtype=bool)


def _eligible(adjacency, k):
    eligible = ~adjacency[:, k]
    eligible[k] = False
    return eligible


def calculate_points_3(k, graph, v):
    """
    Scores of every candidate source for target k, three-node motifs

    Args:
        k (int): Target node
        graph (Digraph|numpy.ndarray): Current graph or its boolean adjacency
        v (numpy.ndarray): Pre-motif values G w, length 32

    Returns:
        ScoreVector: lambda_i = sum over j not in {i, k} of v[r(i, j)]
    """
    adjacency = _adjacency(graph)
    n = adjacency.shape[0]
    m = adjacency.astype(np.int64)
    pair = m + 2 * m.T

    codes = pair + 4 * pair[:, k][None, :] + 16 * m[k, :][:, None]
    values = v[codes]
    values[:, k] = 0.0
    np.fill_diagonal(values, 0.0)

    eligible = _eligible(adjacency, k)
    scores = np.full(n, np.nan)
    scores[eligible] = values[eligible].sum(axis=1)
    return ScoreVector(scores, eligible)


def calculate_points_4(k, graph, v):
    """
    Scores of every candidate source for target k, four-node motifs

    Auxiliary nodes run over ordered pairs (j1, j2), so each 4-node subset is
    visited twice and every score is twice the weighted census change.

    Args:
        k (int): Target node
        graph (Digraph|numpy.ndarray): Current graph or its boolean adjacency
        v (numpy.ndarray): Pre-motif values G w, length 2048

    Returns:
        ScoreVector: Scores of eligible sources
    """
    adjacency = _adjacency(graph)
    n = adjacency.shape[0]
    m = adjacency.astype(np.int64)
    pair = m + 2 * m.T

    eligible = _eligible(adjacency, k)
    sources = np.flatnonzero(eligible)
    scores = np.full(n, np.nan)
    if sources.size == 0:
        return ScoreVector(scores, eligible)

    to_source = pair[sources]
    to_target = pair[:, k]
    codes = (to_source[:, :, None]
             + 4 * to_source[:, None, :]
             + 16 * pair[None, :, :]
             + 64 * to_target[None, :, None]
             + 256 * to_target[None, None, :]
             + 1024 * m[k, sources][:, None, None])

    auxiliary = np.ones((sources.size, n), dtype=bool)
    auxiliary[np.arange(sources.size), sources] = False
    auxiliary[:, k] = False
    valid = auxiliary[:, :, None] & auxiliary[:, None, :]
    valid &= ~np.eye(n, dtype=bool)[None, :, :]

    scores[sources] = np.where(valid, v[codes], 0.0).sum(axis=(1, 2))
    return ScoreVector(scores, eligible)


def pick_target(plan, rng):
    """
    Target node drawn with probability proportional to its unassigned inputs

    Args:
        plan (DegreePlan): Current plan
        rng (RngStream): Random stream

    Returns:
        int|None: Node id, or None once every input is assigned
    """
    total = plan.remaining
    if total == 0:
        return None
    draw = rng.integers(total)
    return int(np.searchsorted(np.cumsum(plan.unassigned), draw, side='right'))


def pick_source(scores, rng, tolerance=1e-9):
    """
    Highest-scoring eligible node, ties broken uniformly at random

    Args:
        scores (ScoreVector): Candidate scores
        rng (RngStream): Random stream
        tolerance (float): Relative tie tolerance, scaled by max |lambda|

    Returns:
        int: Source node
    """
    candidates = scores.candidates
    if candidates.size == 0:
        raise GenerationError("No eligible source node for the chosen target")
    values = scores.scores[candidates]
    best = values.max()
    slack = tolerance * np.abs(values).max()
    tied = candidates[values >= best - slack]
    if tied.size == 1:
        return int(tied[0])
    return int(tied[rng.integers(tied.size)])

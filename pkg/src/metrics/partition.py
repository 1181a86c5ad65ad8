"""
Node partitions
"""

import numpy as np

from utils.errors import InvalidNodesError


class Partition:
    """Assignment of every node to one of n_clust clusters labelled 0..n_clust-1"""

    def __init__(self, assignment):
        assignment = np.array(assignment, dtype=np.int64)
        if assignment.ndim != 1 or assignment.size == 0:
            raise InvalidNodesError("Partition needs a non-empty label per node")
        labels = np.unique(assignment)
        if not np.array_equal(labels, np.arange(labels.size)):
            raise InvalidNodesError(f"Cluster labels must be contiguous from 0, got {labels.tolist()}")
        self.assignment = assignment
        self.assignment.setflags(write=False)

    @classmethod
    def from_labels(cls, labels):
        """
        Partition from arbitrary hashable labels, renumbered in order of first appearance

        Args:
            labels (iterable): One label per node

        Returns:
            Partition: Contiguously labelled partition
        """
        mapping = {}
        assignment = [mapping.setdefault(label, len(mapping)) for label in labels]
        return cls(assignment)

    @classmethod
    def single(cls, n):
        return cls(np.zeros(n, dtype=np.int64))

    @property
    def n(self):
        return self.assignment.size

    @property
    def n_clust(self):
        return int(self.assignment.max()) + 1

    def members(self, cluster):
        return np.flatnonzero(self.assignment == cluster)

    def clusters(self):
        return [self.members(c) for c in range(self.n_clust)]

    def same_cluster(self):
        """Boolean N x N matrix, True where two nodes share a cluster"""
        return self.assignment[:, None] == self.assignment[None, :]

    def relabel_nodes(self, permutation):
        """Partition of the graph relabelled by Digraph.relabel(permutation)"""
        perm = np.asarray(permutation, dtype=np.int64)
        assignment = np.empty_like(self.assignment)
        assignment[perm] = self.assignment
        return Partition.from_labels(assignment)

    def to_dict(self):
        return {'n_clust': self.n_clust, 'assignment': self.assignment.tolist()}

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return np.array_equal(self.assignment, other.assignment)

    def __repr__(self):
        return f"Partition(n={self.n}, n_clust={self.n_clust})"

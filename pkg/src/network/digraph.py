"""
Dense directed graph representation and induced-subgraph codes
"""

import numpy as np
import networkx as nx

from utils.errors import InvalidNodesError, CatalogError

SUPPORTED_SUBGRAPH_SIZES = (3, 4)


def ordered_pairs(size):
    """
    Off-diagonal ordered position pairs of a size-node subgraph in bit order

    Bit p of an induced code stands for the p-th pair of this list, which is
    row-major: (0,1), (0,2), ..., (1,0), (1,2), ...

    Args:
        size (int): Subgraph size

    Returns:
        list: (a, b) position pairs, a != b
    """
    return [(a, b) for a in range(size) for b in range(size) if a != b]


class Digraph:
    """Directed, unweighted graph without self-loops

    The adjacency matrix is stored densely as a read-only boolean array;
    entry (i, j) means the edge i -> j. Values are immutable: operations that
    change edges return new graphs.
    """

    def __init__(self, adjacency):
        """
        Initialize graph from an adjacency matrix

        Args:
            adjacency (array-like): Square 0/1 or boolean N x N matrix
        """
        matrix = np.array(adjacency, dtype=bool, copy=True)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise InvalidNodesError(f"Adjacency must be a non-empty square matrix, got shape {matrix.shape}")
        if matrix.diagonal().any():
            raise InvalidNodesError("Self-loops are not allowed")
        matrix.setflags(write=False)
        self._adjacency = matrix

    @classmethod
    def empty(cls, n):
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def complete(cls, n):
        return cls(~np.eye(n, dtype=bool))

    @classmethod
    def from_edges(cls, n, edges):
        """
        Build a graph from (source, target) pairs

        Args:
            n (int): Node count
            edges (iterable): (source, target) pairs with 0-based ids

        Returns:
            Digraph: New graph
        """
        matrix = np.zeros((n, n), dtype=bool)
        for source, target in edges:
            if not (0 <= source < n and 0 <= target < n):
                raise InvalidNodesError(f"Edge ({source}, {target}) outside graph of {n} nodes")
            matrix[source, target] = True
        return cls(matrix)

    @property
    def n(self):
        return self._adjacency.shape[0]

    @property
    def adjacency(self):
        """Read-only boolean adjacency matrix"""
        return self._adjacency

    @property
    def edge_count(self):
        return int(self._adjacency.sum())

    def has_edge(self, source, target):
        return bool(self._adjacency[source, target])

    def in_degree(self, node):
        return int(self._adjacency[:, node].sum())

    def out_degree(self, node):
        return int(self._adjacency[node, :].sum())

    def in_degrees(self):
        return self._adjacency.sum(axis=0).astype(np.int64)

    def out_degrees(self):
        return self._adjacency.sum(axis=1).astype(np.int64)

    def edges(self):
        """
        Edges in (source, target) lexicographic order

        Returns:
            list: (source, target) tuples of ints
        """
        sources, targets = np.nonzero(self._adjacency)
        return list(zip(sources.tolist(), targets.tolist()))

    def with_edge(self, source, target):
        """Copy of this graph with the edge source -> target added"""
        matrix = self._adjacency.copy()
        matrix[source, target] = True
        return Digraph(matrix)

    def without_edge(self, source, target):
        matrix = self._adjacency.copy()
        matrix[source, target] = False
        return Digraph(matrix)

    def transpose(self):
        """Graph with every edge reversed (in-degrees become out-degrees)"""
        return Digraph(self._adjacency.T)

    def relabel(self, permutation):
        """
        Relabel nodes: node v of this graph becomes node permutation[v]

        Args:
            permutation (array-like): A permutation of range(n)

        Returns:
            Digraph: Isomorphic graph
        """
        perm = np.asarray(permutation, dtype=np.int64)
        if perm.shape != (self.n,) or not np.array_equal(np.sort(perm), np.arange(self.n)):
            raise InvalidNodesError("Relabelling requires a permutation of all node ids")
        matrix = np.zeros_like(self._adjacency)
        matrix[np.ix_(perm, perm)] = self._adjacency
        return Digraph(matrix)

    def to_networkx(self):
        """Export as a networkx.DiGraph with nodes 0..n-1"""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return np.array_equal(self._adjacency, other._adjacency)

    def __hash__(self):
        return hash((self.n, np.packbits(self._adjacency).tobytes()))

    def __repr__(self):
        return f"Digraph(n={self.n}, edges={self.edge_count})"


def induced_code(graph, nodes):
    """
    Code of the ordered subgraph induced by a node tuple

    Bit p of the result is the adjacency entry graph[nodes[a], nodes[b]] for the
    p-th pair (a, b) of ordered_pairs(len(nodes)), so a 3-node code has 6 bits
    and a 4-node code has 12 bits.

    Args:
        graph (Digraph): Graph to read
        nodes (tuple): 3 or 4 distinct node ids

    Returns:
        int: Subgraph code
    """
    nodes = tuple(int(v) for v in nodes)
    if len(nodes) not in SUPPORTED_SUBGRAPH_SIZES:
        raise CatalogError(f"Subgraph size must be 3 or 4, got {len(nodes)}")
    if len(set(nodes)) != len(nodes):
        raise InvalidNodesError(f"Duplicate nodes in {nodes}")
    if any(v < 0 or v >= graph.n for v in nodes):
        raise InvalidNodesError(f"Nodes {nodes} outside graph of {graph.n} nodes")

    adjacency = graph.adjacency
    code = 0
    for bit, (a, b) in enumerate(ordered_pairs(len(nodes))):
        if adjacency[nodes[a], nodes[b]]:
            code |= 1 << bit
    return code


def induced_codes(adjacency, subsets):
    """
    Vectorised induced_code over many node tuples

    Args:
        adjacency (numpy.ndarray): Boolean adjacency matrix
        subsets (numpy.ndarray): Integer array of shape (count, size)

    Returns:
        numpy.ndarray: int64 codes, one per row of subsets
    """
    subsets = np.asarray(subsets, dtype=np.int64)
    codes = np.zeros(subsets.shape[0], dtype=np.int64)
    for bit, (a, b) in enumerate(ordered_pairs(subsets.shape[1])):
        codes |= adjacency[subsets[:, a], subsets[:, b]].astype(np.int64) << bit
    return codes

"""
Motif census by brute force over all node subsets
"""

import itertools
import logging

import numpy as np
from scipy.special import comb

from network.digraph import induced_codes
from utils.errors import CatalogError

logger = logging.getLogger(__name__)

CHUNK_SIZE = 200_000


class MotifCensus:
    """Counts of every motif class over all node subsets of one size

    Indexing with a class id returns that class's count: census[8] is the
    number of feed-forward triples in a three-node census.
    """

    def __init__(self, size, counts):
        self.size = size
        self.counts = np.asarray(counts, dtype=np.int64)

    def __getitem__(self, class_id):
        if not 1 <= class_id <= len(self.counts):
            raise CatalogError(f"Class id {class_id} outside [1, {len(self.counts)}]")
        return int(self.counts[class_id - 1])

    @property
    def total(self):
        return int(self.counts.sum())

    def dot(self, w):
        return float(np.dot(self.counts, w))

    def __sub__(self, other):
        return self.counts - other.counts

    def to_dict(self):
        return {str(m): int(c) for m, c in enumerate(self.counts, start=1)}

    def __eq__(self, other):
        if not isinstance(other, MotifCensus):
            return NotImplemented
        return self.size == other.size and np.array_equal(self.counts, other.counts)

    def __repr__(self):
        return f"MotifCensus(size={self.size}, total={self.total})"


def census(graph, catalog):
    """
    Count motif classes over every node subset of the catalog's size

    Args:
        graph (Digraph): Graph to census
        catalog (MotifCatalog): Catalog giving the classes

    Returns:
        MotifCensus: Counts summing to C(N, size)
    """
    if graph.n < catalog.size:
        raise CatalogError(f"Graph of {graph.n} nodes is smaller than motif size {catalog.size}")

    counts = np.zeros(catalog.n_classes, dtype=np.int64)
    subsets = itertools.combinations(range(graph.n), catalog.size)
    while True:
        chunk = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(subsets, CHUNK_SIZE)),
            dtype=np.int64,
        )
        if chunk.size == 0:
            break
        codes = induced_codes(graph.adjacency, chunk.reshape(-1, catalog.size))
        counts += np.bincount(catalog.class_of_code[codes] - 1, minlength=catalog.n_classes)

    expected = comb(graph.n, catalog.size, exact=True)
    if counts.sum() != expected:
        raise CatalogError(f"Census covers {counts.sum()} subsets, expected {expected}")
    return MotifCensus(catalog.size, counts)

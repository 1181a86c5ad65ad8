"""
Motif catalog: isomorphism classes of 3- and 4-node directed subgraphs

Classes are found by brute-force canonicalisation: the canonical code of a
labelled subgraph is the smallest code over all node permutations. The
three-node class ids follow the conventional figure numbering (pinned below by
representative edge sets); four-node ids are assigned by (edge count,
canonical code).

Pre-motifs describe a candidate source i, auxiliary node(s) j and target k
with the edge i -> k still absent. Pair states use two bits per unordered
pair (x, y): 1 for x -> y only, 2 for y -> x only, 3 for both.

    size 3:  r = P[i,j] + 4 P[j,k] + 16 M[k,i]
    size 4:  r = P[i,j1] + 4 P[i,j2] + 16 P[j1,j2] + 64 P[j1,k] + 256 P[j2,k] + 1024 M[k,i]

where P[x,y] = M[x,y] + 2 M[y,x].
"""

import functools
import itertools
import logging

import numpy as np
from scipy.linalg import solve_triangular

from network.digraph import ordered_pairs, SUPPORTED_SUBGRAPH_SIZES
from utils.errors import CatalogError

logger = logging.getLogger(__name__)

# Representative edge sets on nodes (0, 1, 2) for each three-node class id
SIZE3_PINNED_EDGES = {
    1: [],
    2: [(0, 1)],
    3: [(0, 2), (1, 2)],
    4: [(0, 1), (1, 0)],
    5: [(0, 1), (1, 2)],
    6: [(0, 1), (0, 2)],
    7: [(0, 1), (1, 0), (2, 0)],
    8: [(0, 1), (0, 2), (1, 2)],
    9: [(0, 1), (1, 0), (0, 2)],
    10: [(0, 1), (1, 2), (2, 0)],
    11: [(0, 1), (1, 0), (2, 0), (2, 1)],
    12: [(0, 1), (1, 0), (1, 2), (2, 1)],
    13: [(0, 1), (1, 0), (1, 2), (2, 0)],
    14: [(0, 1), (1, 0), (0, 2), (1, 2)],
    15: [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2)],
    16: [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)],
}

SIZE3_LABELS = {
    1: 'empty',
    2: 'single edge',
    3: 'convergent',
    4: 'mutual dyad',
    5: 'chain',
    6: 'divergent',
    7: 'input to dyad',
    8: 'feed-forward',
    9: 'output from dyad',
    10: 'feedback loop',
    11: 'dyad with divergent external',
    12: 'double dyad',
    13: 'dyad with cycle',
    14: 'dyad with convergent external',
    15: 'five edges',
    16: 'complete',
}

# Pair positions encoded by the base-4 digits of a pre-motif code, lowest digit first.
# Position 0 is the candidate source i, the last position is the target k.
PREMOTIF_PAIRS = {
    3: [(0, 1), (1, 2)],
    4: [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
}

# Visual row order of the printed three-node pre-motif table: pair digits there
# list j -> i before i -> j, so states 1 and 2 swap.
_PRINTED_PAIR_ORDER = (0, 2, 1, 3)


def _code_from_edges(size, edges):
    index = {pair: bit for bit, pair in enumerate(ordered_pairs(size))}
    code = 0
    for pair in edges:
        code |= 1 << index[pair]
    return code


def _edges_from_code(size, code):
    return [pair for bit, pair in enumerate(ordered_pairs(size)) if code >> bit & 1]


def _remapped_codes(size, mapping):
    """Codes of every labelled subgraph after moving pair (a,b) to mapping(a,b)"""
    pairs = ordered_pairs(size)
    index = {pair: bit for bit, pair in enumerate(pairs)}
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    bits = (codes[:, None] >> np.arange(len(pairs))) & 1
    shifts = np.array([index[mapping(a, b)] for a, b in pairs], dtype=np.int64)
    return (bits << shifts).sum(axis=1)


class MotifCatalog:
    """Motif classes of one subgraph size with their transition matrices

    Class ids are 1-based; array-valued attributes are indexed by id - 1.

    Attributes:
        size (int): Subgraph size, 3 or 4
        n_classes (int): 16 or 218
        n_premotifs (int): 32 or 2048
        class_codes (numpy.ndarray): Canonical code per class
        edge_counts (numpy.ndarray): Edge count per class
        class_of_code (numpy.ndarray): Class id of every labelled code
        F (numpy.ndarray): n_classes x n_classes 0/1 single-edge derivation matrix
        G (numpy.ndarray): n_premotifs x n_classes pre-motif transition matrix
    """

    def __init__(self, size):
        if size not in SUPPORTED_SUBGRAPH_SIZES:
            raise CatalogError(f"Motif size must be 3 or 4, got {size}")
        self.size = size
        self.pairs = ordered_pairs(size)
        self.n_bits = len(self.pairs)
        self.n_codes = 1 << self.n_bits

        canonical = np.min(
            [_remapped_codes(size, lambda a, b, p=perm: (p[a], p[b]))
             for perm in itertools.permutations(range(size))],
            axis=0,
        )
        popcount = ((np.arange(self.n_codes)[:, None] >> np.arange(self.n_bits)) & 1).sum(axis=1)
        unique = np.unique(canonical)

        if size == 3:
            pinned = [int(canonical[_code_from_edges(3, SIZE3_PINNED_EDGES[m])]) for m in range(1, 17)]
            if sorted(pinned) != unique.tolist():
                raise CatalogError("Pinned three-node classes do not cover every isomorphism class")
            self.class_codes = np.array(pinned, dtype=np.int64)
        else:
            order = np.lexsort((unique, popcount[unique]))
            self.class_codes = unique[order].astype(np.int64)

        self.n_classes = len(self.class_codes)
        self.edge_counts = popcount[self.class_codes].astype(np.int64)

        id_of_canonical = np.zeros(self.n_codes, dtype=np.int64)
        id_of_canonical[self.class_codes] = np.arange(1, self.n_classes + 1)
        self.class_of_code = id_of_canonical[canonical]

        transposed = _remapped_codes(size, lambda a, b: (b, a))
        self.transpose_class = self.class_of_code[transposed[self.class_codes]]

        self.n_premotifs = 2 * 4 ** len(PREMOTIF_PAIRS[size])
        self.F = derive_F(self)
        self.G = derive_G(self)
        for array in (self.class_codes, self.edge_counts, self.class_of_code,
                      self.transpose_class, self.F, self.G):
            array.setflags(write=False)

        logger.info(f"Built {size}-node motif catalog: {self.n_classes} classes, "
                    f"{self.n_premotifs} pre-motifs")

    def _as_code(self, code):
        if isinstance(code, str):
            if len(code) != self.n_bits or set(code) - {'0', '1'}:
                raise CatalogError(f"Expected a {self.n_bits}-character bit string, got {code!r}")
            return sum(1 << bit for bit, char in enumerate(code) if char == '1')
        if isinstance(code, (int, np.integer)):
            if not 0 <= code < self.n_codes:
                raise CatalogError(f"Code {code} outside [0, {self.n_codes}) for size {self.size}")
            return int(code)
        bits = list(code)
        if len(bits) != self.n_bits:
            raise CatalogError(f"Expected {self.n_bits} bits, got {len(bits)}")
        return sum(1 << bit for bit, value in enumerate(bits) if value)

    def classify(self, code):
        """
        Class id of a labelled subgraph code

        Args:
            code: int code, bit string (character p is bit p) or sequence of bits

        Returns:
            int: Class id in [1, n_classes]
        """
        return int(self.class_of_code[self._as_code(code)])

    def classify_edges(self, edges):
        """Class id of the subgraph with the given (a, b) position pairs"""
        return self.classify(_code_from_edges(self.size, edges))

    def class_edges(self, class_id):
        """Edges of the canonical representative of a class"""
        return _edges_from_code(self.size, int(self.class_codes[class_id - 1]))

    def label(self, class_id):
        if self.size == 3:
            return SIZE3_LABELS[class_id]
        return f"{int(self.edge_counts[class_id - 1])}-edge class {class_id}"

    def delta(self, class_id):
        """Weight vector promoting a single class"""
        if not 1 <= class_id <= self.n_classes:
            raise CatalogError(f"Class id {class_id} outside [1, {self.n_classes}]")
        w = np.zeros(self.n_classes)
        w[class_id - 1] = 1.0
        return w

    def premotif_values(self, w):
        """
        Score contribution of every pre-motif, v = G w

        Args:
            w (array-like): Effective weights, one per class

        Returns:
            numpy.ndarray: n_premotifs values
        """
        return self.G @ self._check_weights(w)

    def transpose_weights(self, w):
        """
        Weights for the edge-reversed problem

        Class m of the result carries the weight of the class obtained by
        reversing every edge of m, so generating with these weights and
        transposing the result promotes the original motifs by out-degree.
        """
        w = self._check_weights(w)
        return w[self.transpose_class - 1]

    def printed_row_order(self):
        """
        Pre-motif code of each row of the printed three-node pre-motif table

        Returns:
            numpy.ndarray: order[t] is the code r of printed row t (0-based)
        """
        if self.size != 3:
            raise CatalogError("The printed pre-motif table exists only for three-node motifs")
        rows = []
        for t in range(self.n_premotifs):
            a = _PRINTED_PAIR_ORDER[t % 4]
            b = _PRINTED_PAIR_ORDER[(t % 16) // 4]
            rows.append(a + 4 * b + 16 * (t // 16))
        return np.array(rows, dtype=np.int64)

    def _check_weights(self, w):
        w = np.asarray(w, dtype=float)
        if w.shape != (self.n_classes,):
            raise CatalogError(f"Expected {self.n_classes} weights, got shape {w.shape}")
        return w

    def to_dict(self):
        """JSON-ready dump of classes and transition matrices"""
        return {
            'size': self.size,
            'n_classes': self.n_classes,
            'n_premotifs': self.n_premotifs,
            'classes': [
                {
                    'id': m,
                    'label': self.label(m),
                    'edge_count': int(self.edge_counts[m - 1]),
                    'canonical_code': int(self.class_codes[m - 1]),
                    'edges': [list(pair) for pair in self.class_edges(m)],
                }
                for m in range(1, self.n_classes + 1)
            ],
            'F': self.F.astype(int).tolist(),
            'G': self.G.astype(int).tolist(),
        }

    def __repr__(self):
        return f"MotifCatalog(size={self.size}, classes={self.n_classes})"


def premotif_code_to_subgraph(size, r):
    """
    Labelled subgraph code of pre-motif r (positions: i=0, j..., k=size-1)

    Args:
        size (int): 3 or 4
        r (int): Pre-motif code

    Returns:
        int: Subgraph code without the candidate edge i -> k
    """
    edges = []
    for digit, (x, y) in enumerate(PREMOTIF_PAIRS[size]):
        state = (r >> (2 * digit)) & 3
        if state & 1:
            edges.append((x, y))
        if state & 2:
            edges.append((y, x))
    if (r >> (2 * len(PREMOTIF_PAIRS[size]))) & 1:
        edges.append((size - 1, 0))
    return _code_from_edges(size, edges)


def derive_F(catalog):
    """
    Single-edge derivation matrix

    F[l, m] = 1 when adding one edge to a class-l subgraph can give a class-m
    subgraph. Computed from each class representative and every absent edge.

    Args:
        catalog (MotifCatalog): Catalog with classes enumerated

    Returns:
        numpy.ndarray: n_classes x n_classes int matrix
    """
    F = np.zeros((catalog.n_classes, catalog.n_classes), dtype=np.int64)
    for l, code in enumerate(catalog.class_codes):
        for bit in range(catalog.n_bits):
            if not code >> bit & 1:
                m = catalog.class_of_code[code | (1 << bit)]
                F[l, m - 1] = 1
    return F


def derive_G(catalog):
    """
    Pre-motif transition matrix

    Row r holds -1 at the class of pre-motif r and +1 at its class after
    adding the candidate edge i -> k.

    Args:
        catalog (MotifCatalog): Catalog with classes enumerated

    Returns:
        numpy.ndarray: n_premotifs x n_classes int matrix
    """
    size = catalog.size
    candidate = 1 << ordered_pairs(size).index((0, size - 1))
    G = np.zeros((catalog.n_premotifs, catalog.n_classes), dtype=np.int64)
    for r in range(catalog.n_premotifs):
        code = premotif_code_to_subgraph(size, r)
        G[r, catalog.class_of_code[code] - 1] = -1
        G[r, catalog.class_of_code[code | candidate] - 1] = 1
    return G


def adapt_weights(wtilde, F, n):
    """
    Effective weights w solving (I - F/N) w = wtilde

    F is strictly upper triangular in class order, so this is a back
    substitution; it equals the finite series sum of (F/N)^d wtilde.

    Args:
        wtilde (array-like): Preferred weights, one per class
        F (numpy.ndarray): Single-edge derivation matrix
        n (int): Network size the weights are used at

    Returns:
        numpy.ndarray: Effective weights
    """
    wtilde = np.asarray(wtilde, dtype=float)
    if n < 2:
        raise CatalogError(f"Weight adaptation needs N >= 2, got {n}")
    if wtilde.shape != (F.shape[0],):
        raise CatalogError(f"Expected {F.shape[0]} weights, got shape {wtilde.shape}")
    system = np.eye(F.shape[0]) - F / n
    return solve_triangular(system, wtilde, lower=False, unit_diagonal=True)


@functools.lru_cache(maxsize=None)
def build_catalog(size):
    """
    Catalog for a subgraph size, built once per process

    Args:
        size (int): 3 or 4

    Returns:
        MotifCatalog: Shared, read-only catalog
    """
    return MotifCatalog(size)


class WeightVector:
    """Preferred motif weights and their size-dependent effective weights"""

    def __init__(self, catalog, wtilde, adapt=True):
        self.catalog = catalog
        self.wtilde = catalog._check_weights(wtilde).copy()
        self.adapt = adapt
        self._effective = {}

    @classmethod
    def delta(cls, catalog, class_id, adapt=True):
        return cls(catalog, catalog.delta(class_id), adapt=adapt)

    def effective(self, n):
        """
        Weights used for scoring in an N-node network

        Args:
            n (int): Network size

        Returns:
            numpy.ndarray: adapt_weights(wtilde, F, n), or wtilde when adaptation is off
        """
        if not self.adapt:
            return self.wtilde.copy()
        if n not in self._effective:
            self._effective[n] = adapt_weights(self.wtilde, self.catalog.F, n)
        return self._effective[n].copy()

    def transposed(self):
        return WeightVector(self.catalog, self.catalog.transpose_weights(self.wtilde), adapt=self.adapt)

    def __repr__(self):
        nonzero = {m + 1: float(v) for m, v in enumerate(self.wtilde) if v != 0}
        return f"WeightVector(size={self.catalog.size}, nonzero={nonzero}, adapt={self.adapt})"

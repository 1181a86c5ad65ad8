"""
Tests for motif classes, transition matrices and weight adaptation
"""

import itertools

import numpy as np
import pytest
from networkx.generators.triads import TRIAD_EDGES

from motifs.catalog import (
    MotifCatalog, WeightVector, adapt_weights, build_catalog, premotif_code_to_subgraph,
)
from network.digraph import ordered_pairs
from utils.errors import CatalogError

# networkx triad names by three-node class id
TRIAD_NAMES = {
    1: '003', 2: '012', 3: '021U', 4: '102', 5: '021C', 6: '021D', 7: '111D', 8: '030T',
    9: '111U', 10: '030C', 11: '120D', 12: '201', 13: '120C', 14: '120U', 15: '210', 16: '300',
}

# Printed single-edge derivation table, row l lists the reachable classes.
# Row 3 of the printed table also lists class 9, which no single edge reaches.
PRINTED_F = {
    1: {2}, 2: {3, 4, 5, 6}, 3: {7, 8, 9}, 4: {7, 9}, 5: {7, 8, 9, 10}, 6: {8, 9},
    7: {11, 12, 13}, 8: {11, 13, 14}, 9: {12, 13, 14}, 10: {13},
    11: {15}, 12: {15}, 13: {15}, 14: {15}, 15: {16}, 16: set(),
}

# (class losing, class gaining) for each row of the printed pre-motif table
PRINTED_G = [
    (1, 2), (2, 5), (2, 6), (4, 9), (2, 5), (5, 10), (3, 8), (7, 13),
    (2, 3), (6, 8), (5, 8), (9, 14), (4, 7), (9, 13), (7, 11), (12, 15),
    (2, 4), (3, 7), (5, 9), (7, 12), (6, 9), (8, 13), (8, 14), (11, 15),
    (5, 7), (8, 11), (10, 13), (13, 15), (9, 12), (14, 15), (13, 15), (15, 16),
]

LETTER = {'a': 0, 'b': 1, 'c': 2}


def code_edges(size, code):
    return [pair for bit, pair in enumerate(ordered_pairs(size)) if code >> bit & 1]


class TestThreeNodeCatalog:
    def test_class_counts(self, catalog3):
        assert catalog3.n_classes == 16
        assert catalog3.n_premotifs == 32
        assert catalog3.edge_counts.tolist() == [0, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 5, 6]

    @pytest.mark.parametrize('class_id', range(1, 17))
    def test_matches_networkx_triads(self, catalog3, class_id):
        edges = [(LETTER[e[0]], LETTER[e[1]]) for e in TRIAD_EDGES[TRIAD_NAMES[class_id]]]
        assert catalog3.classify_edges(edges) == class_id

    def test_classify_is_permutation_invariant(self, catalog3):
        assert catalog3.classify_edges([(0, 1), (1, 2), (0, 2)]) == 8
        assert catalog3.classify_edges([(2, 1), (1, 0), (2, 0)]) == 8
        assert catalog3.classify_edges([(1, 0), (0, 2), (1, 2)]) == 8

    def test_every_code_agrees_with_its_relabellings(self, catalog3):
        for code in range(64):
            edges = code_edges(3, code)
            expected = catalog3.classify(code)
            for perm in itertools.permutations(range(3)):
                assert catalog3.classify_edges([(perm[a], perm[b]) for a, b in edges]) == expected

    def test_classify_input_forms(self, catalog3):
        assert catalog3.classify(0) == 1
        assert catalog3.classify('100000') == 2
        assert catalog3.classify([1, 1, 1, 1, 1, 1]) == 16

    @pytest.mark.parametrize('code', ['10', '1000002', 64, -1, [1, 0]])
    def test_classify_rejects(self, catalog3, code):
        with pytest.raises(CatalogError):
            catalog3.classify(code)

    def test_class_edges_round_trip(self, catalog3):
        for m in range(1, 17):
            assert catalog3.classify_edges(catalog3.class_edges(m)) == m

    def test_transpose_classes(self, catalog3):
        assert catalog3.transpose_class[3 - 1] == 6
        assert catalog3.transpose_class[7 - 1] == 9
        assert catalog3.transpose_class[8 - 1] == 8
        assert catalog3.transpose_class[11 - 1] == 14

    def test_labels(self, catalog3):
        assert catalog3.label(8) == 'feed-forward'
        assert catalog3.label(1) == 'empty'


class TestTransitionMatrices:
    def test_derived_F_differs_from_printed_only_at_3_9(self, catalog3):
        printed = np.zeros((16, 16), dtype=int)
        for l, targets in PRINTED_F.items():
            for m in targets:
                printed[l - 1, m - 1] = 1
        differing = np.argwhere(catalog3.F != printed) + 1
        assert differing.tolist() == [[3, 9]]
        assert catalog3.F[3 - 1, 9 - 1] == 0

    def test_no_single_edge_turns_3_into_9(self, catalog3):
        # in-star a<-b, a<-c; every added edge gives 111D or 030T
        star = [(1, 0), (2, 0)]
        reached = {catalog3.classify_edges(star + [extra])
                   for extra in [(0, 1), (0, 2), (1, 2), (2, 1)]}
        assert reached == {7, 8}

    def test_F_is_strictly_upper_triangular(self, catalog3, catalog4):
        for catalog in (catalog3, catalog4):
            assert not np.tril(catalog.F).any()

    def test_G_matches_printed_rows(self, catalog3):
        order = catalog3.printed_row_order()
        assert sorted(order.tolist()) == list(range(32))
        for t, (lost, gained) in enumerate(PRINTED_G):
            row = catalog3.G[order[t]]
            assert row[lost - 1] == -1
            assert row[gained - 1] == 1
            assert np.abs(row).sum() == 2

    def test_G_rows_add_one_edge(self, catalog4):
        assert catalog4.G.shape == (2048, 218)
        assert np.all(catalog4.G.sum(axis=1) == 0)
        lost = np.argmax(catalog4.G == -1, axis=1)
        gained = np.argmax(catalog4.G == 1, axis=1)
        assert np.all(catalog4.edge_counts[gained] == catalog4.edge_counts[lost] + 1)

    def test_premotif_without_candidate_edge(self):
        assert premotif_code_to_subgraph(3, 0) == 0
        # r = 16: only k -> i, which is bit (2, 0)
        assert premotif_code_to_subgraph(3, 16) == 1 << 4

    def test_printed_order_only_for_size_three(self, catalog4):
        with pytest.raises(CatalogError):
            catalog4.printed_row_order()

    def test_matrices_are_read_only(self, catalog3):
        with pytest.raises(ValueError):
            catalog3.F[0, 0] = 1


class TestFourNodeCatalog:
    def test_class_count(self, catalog4):
        assert catalog4.n_classes == 218
        assert catalog4.edge_counts[0] == 0
        assert catalog4.edge_counts[-1] == 12
        assert np.all(np.diff(catalog4.edge_counts) >= 0)

    def test_classes_partition_codes(self, catalog4):
        sizes = np.bincount(catalog4.class_of_code, minlength=219)[1:]
        assert sizes.sum() == 4096
        assert sizes.min() >= 1
        assert sizes.max() <= 24

    def test_sampled_codes_agree_with_their_relabellings(self, catalog4, rng):
        for code in rng.integers(4096, size=200):
            edges = code_edges(4, int(code))
            expected = catalog4.classify(int(code))
            for _ in range(4):
                perm = rng.permutation(4)
                assert catalog4.classify_edges([(int(perm[a]), int(perm[b])) for a, b in edges]) == expected


class TestWeightAdaptation:
    def test_feed_forward_expansion(self, catalog3):
        n = 7
        w = adapt_weights(catalog3.delta(8), catalog3.F, n)
        expected = catalog3.delta(8)
        for m in (3, 5, 6):
            expected[m - 1] = 1 / n
        expected[2 - 1] = 3 / n ** 2
        expected[1 - 1] = 3 / n ** 3
        assert np.allclose(w, expected)

    def test_matches_series(self, catalog4, rng):
        wtilde = rng.normal(1.0, 218)
        n = 12
        step = catalog4.F / n
        series, term = np.zeros(218), wtilde.copy()
        for _ in range(13):
            series += term
            term = step @ term
        assert np.allclose(adapt_weights(wtilde, catalog4.F, n), series)

    def test_rejects_small_networks(self, catalog3):
        with pytest.raises(CatalogError):
            adapt_weights(catalog3.delta(1), catalog3.F, 1)

    def test_rejects_wrong_length(self, catalog3):
        with pytest.raises(CatalogError):
            adapt_weights(np.ones(5), catalog3.F, 10)

    def test_weight_vector_without_adaptation(self, catalog3):
        weights = WeightVector.delta(catalog3, 8, adapt=False)
        assert np.array_equal(weights.effective(50), catalog3.delta(8))

    def test_transposed_weights(self, catalog3):
        transposed = WeightVector.delta(catalog3, 3).transposed()
        assert np.array_equal(transposed.wtilde, catalog3.delta(6))

    def test_premotif_values(self, catalog3):
        values = catalog3.premotif_values(catalog3.delta(2))
        assert values[0] == 1.0


class TestBuildCatalog:
    def test_cached(self):
        assert build_catalog(3) is build_catalog(3)

    def test_rejects_size(self):
        with pytest.raises(CatalogError):
            MotifCatalog(5)

    def test_to_dict(self, catalog3):
        document = catalog3.to_dict()
        assert len(document['classes']) == 16
        assert document['classes'][7]['label'] == 'feed-forward'
        assert len(document['G']) == 32

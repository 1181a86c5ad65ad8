"""
Tests for clustering, path length, small-worldness and modularity
"""

import numpy as np
import pytest

from baselines.watts_strogatz import generate_ws_directed
from metrics.clustering import clustering_coefficient, clustering_coefficients, local_clustering
from metrics.modularity import FULL, SIMPLIFIED, intra_inter_edge_counts, modularity, modularity_matrix
from metrics.partition import Partition
from metrics.partitioning import (
    bisection_clustering, greedy_modularity_split, hamming_distance_matrix, hierarchical_clustering,
)
from metrics.paths import harmonic_path_length
from metrics.small_world import reference_statistics, small_worldness
from network.degrees import InDegreeSpec
from network.digraph import Digraph
from network.rng import RngStream
from utils.errors import DegenerateMetricError, InvalidNodesError, InvalidSpecError

BLOCKS = [0] * 5 + [1] * 5


class TestClustering:
    def test_partially_bidirected_triangle(self):
        graph = Digraph.from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 1), (0, 2)])
        assert local_clustering(graph, 1) == pytest.approx(0.5)

    def test_complete_graph(self):
        assert clustering_coefficient(Digraph.complete(6)) == pytest.approx(1.0)

    def test_nodes_with_one_neighbour(self):
        graph = Digraph.from_edges(4, [(0, 1), (2, 3)])
        assert clustering_coefficients(graph).tolist() == [0.0, 0.0, 0.0, 0.0]

    def test_bounded(self, rng):
        adjacency = rng.random((12, 12)) < 0.4
        np.fill_diagonal(adjacency, False)
        values = clustering_coefficients(Digraph(adjacency))
        assert values.min() >= 0.0 and values.max() <= 1.0


class TestPathLength:
    def test_cycle(self, cycle3):
        stats = harmonic_path_length(cycle3)
        assert stats.L == pytest.approx(4 / 3)
        assert stats.reachable_pairs == 6

    def test_complete(self):
        assert harmonic_path_length(Digraph.complete(5)).L == pytest.approx(1.0)

    def test_unreachable_pairs_add_nothing(self):
        stats = harmonic_path_length(Digraph.from_edges(3, [(0, 1)]))
        assert stats.L == pytest.approx(6.0)
        assert stats.reachable_pairs == 1

    def test_empty_graph_is_degenerate(self):
        stats = harmonic_path_length(Digraph.empty(4))
        assert stats.is_degenerate
        assert stats.to_dict()['L'] is None


class TestSmallWorldness:
    def test_report_terms(self):
        graph = generate_ws_directed(30, 4, 0.1, RngStream(1))
        report = small_worldness(graph, InDegreeSpec.delta(4), 5, RngStream(2))
        assert report.n_reference == 5
        assert report.S == pytest.approx((report.C / report.C_rand) / (report.L / report.L_rand))

    def test_ring_lattice_is_small_world_like(self):
        graph = generate_ws_directed(60, 5, 0.1, RngStream(4))
        report = small_worldness(graph, InDegreeSpec.delta(5), 10, RngStream(5))
        assert report.C > report.C_rand

    def test_references_are_reproducible(self):
        spec = InDegreeSpec.delta(3)
        assert reference_statistics(20, spec, 3, RngStream(8)) == reference_statistics(20, spec, 3, RngStream(8))

    def test_degenerate_references(self):
        with pytest.raises(DegenerateMetricError):
            small_worldness(Digraph.empty(10), InDegreeSpec.delta(0), 3, RngStream(0))

    def test_needs_references(self, cycle3):
        with pytest.raises(InvalidSpecError):
            small_worldness(cycle3, InDegreeSpec.delta(1), 0, RngStream(0))


class TestPartition:
    def test_from_labels(self):
        partition = Partition.from_labels(['b', 'a', 'b', 'c'])
        assert partition.assignment.tolist() == [0, 1, 0, 2]
        assert partition.n_clust == 3

    def test_rejects_gaps(self):
        with pytest.raises(InvalidNodesError):
            Partition([0, 2])

    def test_does_not_mutate_input(self):
        labels = np.array([0, 1, 1])
        Partition(labels)
        labels[0] = 1

    def test_relabel_nodes(self):
        partition = Partition([0, 0, 1])
        assert partition.relabel_nodes([2, 1, 0]).members(0).tolist() == [0]

    def test_clusters(self):
        clusters = Partition([1, 0, 1, 2, 0]).clusters()
        assert [c.tolist() for c in clusters] == [[1, 4], [0, 2], [3]]


class TestModularity:
    def test_two_cliques(self, two_cliques):
        assert modularity(two_cliques, Partition(BLOCKS)).Q == pytest.approx(0.5)

    def test_simplified_two_cliques(self, two_cliques):
        report = modularity(two_cliques, Partition(BLOCKS), variant=SIMPLIFIED)
        assert report.Q == pytest.approx(5 / 9)

    def test_single_cluster_is_zero(self, rng):
        adjacency = rng.random((10, 10)) < 0.3
        np.fill_diagonal(adjacency, False)
        graph = Digraph(adjacency)
        assert modularity(graph, Partition.single(10)).Q == pytest.approx(0.0, abs=1e-12)

    def test_matrix_rows_sum_to_zero(self, two_cliques):
        assert np.allclose(modularity_matrix(two_cliques, FULL).sum(axis=1), 0.0)

    def test_edgeless_graph(self):
        with pytest.raises(DegenerateMetricError):
            modularity(Digraph.empty(4), Partition.single(4))

    def test_partition_size_mismatch(self, two_cliques):
        with pytest.raises(InvalidSpecError):
            modularity(two_cliques, Partition.single(4))

    def test_unknown_variant(self, two_cliques):
        with pytest.raises(InvalidSpecError):
            modularity_matrix(two_cliques, 'other')

    def test_intra_inter_counts(self, two_cliques):
        graph = two_cliques.with_edge(0, 9)
        assert intra_inter_edge_counts(graph, Partition(BLOCKS)) == (40, 1)


class TestPartitioning:
    def test_hamming_distances(self, two_cliques):
        distances = hamming_distance_matrix(two_cliques)
        assert distances[0, 1] == 0
        assert distances[0, 7] == 8
        assert np.array_equal(distances, distances.T)
        assert not distances.diagonal().any()

    def test_hierarchical_recovers_blocks(self, two_cliques):
        partition = hierarchical_clustering(hamming_distance_matrix(two_cliques), 2)
        assert partition == Partition(BLOCKS)

    def test_hierarchical_lowest_index_ties(self):
        partition = hierarchical_clustering(np.zeros((4, 4)), 3)
        assert partition.assignment.tolist() == [0, 0, 1, 2]

    def test_hierarchical_rejects_cluster_count(self):
        with pytest.raises(InvalidSpecError):
            hierarchical_clustering(np.zeros((3, 3)), 4)

    def test_greedy_split_separates_cliques(self, two_cliques):
        side = greedy_modularity_split(two_cliques, np.arange(10), RngStream(1))
        assert side.sum() == 5
        assert len(set(side[:5].tolist())) == 1

    def test_bisection(self, two_cliques):
        partition = bisection_clustering(two_cliques, 2, rng=RngStream(2))
        assert partition.n_clust == 2
        assert modularity(two_cliques, partition).Q == pytest.approx(0.5)

    def test_bisection_single_cluster(self, two_cliques):
        assert bisection_clustering(two_cliques, 1).n_clust == 1


class TestOracles:
    def test_hierarchical_matches_scipy_weighted_linkage(self, rng):
        from scipy.cluster.hierarchy import fcluster, linkage
        from scipy.spatial.distance import squareform

        points = rng.random((12, 3))
        distances = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=2)
        tree = linkage(squareform(distances, checks=False), method='weighted')
        for n_clust in (2, 4, 7):
            expected = Partition.from_labels(fcluster(tree, n_clust, criterion='maxclust'))
            assert hierarchical_clustering(distances, n_clust) == expected

    def test_path_length_matches_networkx(self, rng):
        import networkx as nx

        adjacency = rng.random((15, 15)) < 0.15
        np.fill_diagonal(adjacency, False)
        graph = Digraph(adjacency)
        lengths = dict(nx.all_pairs_shortest_path_length(graph.to_networkx()))
        total = sum(1.0 / d for i, row in lengths.items() for j, d in row.items() if i != j)
        assert harmonic_path_length(graph).L == pytest.approx(15 * 14 / total)

    def test_relabelling_invariance(self, two_cliques, rng):
        perm = rng.permutation(10)
        moved = two_cliques.relabel(perm)
        partition = Partition(BLOCKS)
        assert clustering_coefficient(moved) == pytest.approx(clustering_coefficient(two_cliques))
        assert harmonic_path_length(moved).L == pytest.approx(harmonic_path_length(two_cliques).L)
        assert (modularity(moved, partition.relabel_nodes(perm)).Q
                == pytest.approx(modularity(two_cliques, partition).Q))

    def test_path_length_ignores_direction_reversal(self, rng):
        adjacency = rng.random((14, 14)) < 0.2
        np.fill_diagonal(adjacency, False)
        graph = Digraph(adjacency)
        assert harmonic_path_length(graph.transpose()).L == pytest.approx(harmonic_path_length(graph).L)

    @pytest.mark.parametrize('n_clust', [2, 3, 5])
    def test_modularity_bounded_by_cluster_count(self, rng, n_clust):
        for _ in range(10):
            adjacency = rng.random((16, 16)) < 0.25
            np.fill_diagonal(adjacency, False)
            partition = Partition.from_labels(rng.integers(n_clust, size=16))
            report = modularity(Digraph(adjacency), partition)
            assert report.Q <= 1.0 - 1.0 / partition.n_clust + 1e-12

    def test_two_cliques_reach_the_bound(self, two_cliques):
        assert modularity(two_cliques, Partition(BLOCKS)).Q == pytest.approx(1.0 - 1.0 / 2)

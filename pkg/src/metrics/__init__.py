"""
Global structure measures and partitioning schemes
"""

from .clustering import clustering_coefficient, clustering_coefficients, local_clustering
from .paths import PathStats, harmonic_path_length
from .small_world import SmallWorldnessReport, small_worldness, reference_statistics
from .partition import Partition
from .modularity import (
    ModularityReport, modularity, modularity_matrix, intra_inter_edge_counts, FULL, SIMPLIFIED,
)
from .partitioning import (
    hamming_distance_matrix, hierarchical_clustering, greedy_modularity_split, bisection_clustering,
)

__all__ = [
    'clustering_coefficient', 'clustering_coefficients', 'local_clustering',
    'PathStats', 'harmonic_path_length',
    'SmallWorldnessReport', 'small_worldness', 'reference_statistics',
    'Partition',
    'ModularityReport', 'modularity', 'modularity_matrix', 'intra_inter_edge_counts', 'FULL', 'SIMPLIFIED',
    'hamming_distance_matrix', 'hierarchical_clustering', 'greedy_modularity_split', 'bisection_clustering',
]

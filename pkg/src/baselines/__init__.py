"""
Reference network constructions
"""

from .random_network import generate_random_network
from .watts_strogatz import generate_ws_directed
from .strategies import (
    INTRA, INTER, STRATEGIES, intra_connectivity, inter_connectivity, build_strategy,
    empty_motif_count, rewire_neighborhood,
)

__all__ = [
    'generate_random_network', 'generate_ws_directed',
    'INTRA', 'INTER', 'STRATEGIES', 'intra_connectivity', 'inter_connectivity', 'build_strategy',
    'empty_motif_count', 'rewire_neighborhood',
]

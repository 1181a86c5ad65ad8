"""
Motif classes, transition matrices, weight adaptation and census
"""

from .catalog import (
    MotifCatalog, WeightVector, build_catalog, derive_F, derive_G, adapt_weights,
    premotif_code_to_subgraph, SIZE3_LABELS, SIZE3_PINNED_EDGES,
)
from .census import MotifCensus, census

__all__ = [
    'MotifCatalog', 'WeightVector', 'build_catalog', 'derive_F', 'derive_G', 'adapt_weights',
    'premotif_code_to_subgraph', 'SIZE3_LABELS', 'SIZE3_PINNED_EDGES',
    'MotifCensus', 'census',
]

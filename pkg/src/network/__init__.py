"""
Graph core: directed graphs, in-degree plans, random streams and edge-list I/O
"""

from .rng import RngStream, label_key
from .digraph import Digraph, induced_code, induced_codes, ordered_pairs
from .degrees import InDegreeSpec, DegreePlan, draw_in_degrees
from .edge_list import read_edge_list, write_edge_list, load_graph, save_graph

__all__ = [
    'RngStream', 'label_key',
    'Digraph', 'induced_code', 'induced_codes', 'ordered_pairs',
    'InDegreeSpec', 'DegreePlan', 'draw_in_degrees',
    'read_edge_list', 'write_edge_list', 'load_graph', 'save_graph',
]

"""
Motif-based network generation
"""

import logging
import time

import numpy as np

from motifs.catalog import WeightVector, build_catalog
from network.degrees import draw_in_degrees
from network.digraph import Digraph
from utils.errors import InvalidSpecError, GenerationError
from .scoring import calculate_points_3, calculate_points_4, pick_target, pick_source

DIRECTIONS = ('in', 'out')


class MBNGenerator:
    def __init__(self, catalog, tie_tolerance=1e-9):
        """
        Initialize generator

        Args:
            catalog (MotifCatalog): Motif classes and transition matrices
            tie_tolerance (float): Relative tolerance under which scores tie
        """
        self.catalog = catalog
        self.tie_tolerance = tie_tolerance
        self.logger = logging.getLogger(__name__)
        self.points = calculate_points_3 if catalog.size == 3 else calculate_points_4

        self.edge_sequence = []
        self.plan = None

    def generate(self, n, spec, weights, rng, direction='in'):
        """
        Generate one network

        Each step draws a target k with probability proportional to its
        unassigned inputs, scores every eligible source and adds the edge from
        a best-scoring one, until every drawn in-degree is met.

        Args:
            n (int): Network size
            spec (InDegreeSpec): In-degree distribution
            weights (WeightVector|array-like): Preferred weights; plain arrays are adapted
            rng (RngStream): Random stream
            direction (str): 'in' applies the plan to in-degrees, 'out' to out-degrees

        Returns:
            Digraph: Generated network
        """
        if n < self.catalog.size:
            raise InvalidSpecError(f"Network of {n} nodes is smaller than motif size {self.catalog.size}")
        if direction not in DIRECTIONS:
            raise InvalidSpecError(f"Direction must be one of {DIRECTIONS}, got {direction!r}")
        if not isinstance(weights, WeightVector):
            weights = WeightVector(self.catalog, weights)
        if direction == 'out':
            weights = weights.transposed()

        started = time.perf_counter()
        self.plan = draw_in_degrees(spec, n, rng)
        values = self.catalog.premotif_values(weights.effective(n))
        adjacency = np.zeros((n, n), dtype=bool)
        self.edge_sequence = []

        try:
            while True:
                k = pick_target(self.plan, rng)
                if k is None:
                    break
                scores = self.points(k, adjacency, values)
                i = pick_source(scores, rng, self.tie_tolerance)
                if adjacency[i, k] or i == k:
                    raise GenerationError(f"Chosen edge {i}->{k} is not eligible")
                adjacency[i, k] = True
                self.plan.assign(k)
                self.edge_sequence.append((i, k))
                self.logger.debug(f"Edge {i}->{k} with score {scores[i]:.6g}")
        except GenerationError as e:
            self.logger.error(f"Generation failed after {len(self.edge_sequence)} edges: {e}")
            raise

        graph = Digraph(adjacency)
        if direction == 'out':
            graph = graph.transpose()
        self.logger.info(f"Generated {self.catalog.size}-node MBN with {n} nodes and "
                         f"{graph.edge_count} edges in {time.perf_counter() - started:.2f}s")
        return graph


def generate_mbn(n, spec, wtilde, size=3, rng=None, adapt=True, tie_tolerance=1e-9, direction='in'):
    """
    Generate a motif-based network

    Args:
        n (int): Network size
        spec (InDegreeSpec): In-degree distribution
        wtilde (array-like): Preferred weights, one per motif class
        size (int): Motif size, 3 or 4
        rng (RngStream): Random stream
        adapt (bool): Apply weight adaptation
        tie_tolerance (float): Relative tie tolerance
        direction (str): 'in' or 'out'

    Returns:
        Digraph: Generated network
    """
    if rng is None:
        raise InvalidSpecError("generate_mbn needs an explicit RngStream")
    catalog = build_catalog(size)
    generator = MBNGenerator(catalog, tie_tolerance=tie_tolerance)
    return generator.generate(n, spec, WeightVector(catalog, wtilde, adapt=adapt), rng, direction=direction)

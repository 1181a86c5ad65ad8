"""
Small-worldness index against degree-matched random networks
"""

import logging
from dataclasses import dataclass, asdict

import numpy as np

from baselines.random_network import generate_random_network
from utils.errors import DegenerateMetricError, InvalidSpecError
from .clustering import clustering_coefficient
from .paths import harmonic_path_length

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmallWorldnessReport:
    S: float
    C: float
    L: float
    C_rand: float
    L_rand: float
    n_reference: int

    def to_dict(self):
        return asdict(self)


def reference_statistics(n, spec, samples, rng, reference=generate_random_network):
    """
    Mean clustering and path length of random networks with the same in-degree spec

    Args:
        n (int): Network size
        spec (InDegreeSpec): In-degree distribution shared with the measured graph
        samples (int): Number of reference networks
        rng (RngStream): Random stream; network r uses rng.derive(r)
        reference (callable): (n, spec, rng) -> Digraph

    Returns:
        tuple: (C_rand, L_rand)
    """
    clustering, lengths = [], []
    for r in range(samples):
        graph = reference(n, spec, rng.derive(r))
        clustering.append(clustering_coefficient(graph))
        lengths.append(harmonic_path_length(graph).L)
    return float(np.mean(clustering)), float(np.mean(lengths))


def small_worldness(graph, spec, samples, rng, reference=generate_random_network):
    """
    Small-worldness S = (C / C_rand) / (L / L_rand)

    Args:
        graph (Digraph): Graph to measure
        spec (InDegreeSpec): In-degree distribution used for the graph
        samples (int): Number of reference networks R
        rng (RngStream): Random stream for the references
        reference (callable): Reference network generator

    Returns:
        SmallWorldnessReport: S with all intermediate terms
    """
    if samples < 1:
        raise InvalidSpecError(f"Small-worldness needs at least one reference network, got {samples}")

    C = clustering_coefficient(graph)
    L = harmonic_path_length(graph).L
    C_rand, L_rand = reference_statistics(graph.n, spec, samples, rng, reference)

    if C_rand == 0:
        raise DegenerateMetricError("C_rand is zero: reference networks have no clustering")
    for name, value in (('L', L), ('L_rand', L_rand)):
        if not np.isfinite(value) or value <= 0:
            raise DegenerateMetricError(f"{name} is degenerate ({value}): no reachable node pairs")

    S = (C / C_rand) / (L / L_rand)
    logger.debug(f"Small-worldness {S:.4f} (C={C:.4f}, C_rand={C_rand:.4f}, L={L:.4f}, L_rand={L_rand:.4f})")
    return SmallWorldnessReport(S=float(S), C=C, L=L, C_rand=C_rand, L_rand=L_rand, n_reference=samples)

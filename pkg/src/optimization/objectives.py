"""
Noisy objectives scored on generated networks

Both objectives average a metric over cfg.networks_per_evaluation networks
for every in-degree spec of the config, then average across specs.
"""

import numpy as np

from generation.generator import MBNGenerator
from metrics.modularity import modularity
from metrics.partitioning import hamming_distance_matrix, hierarchical_clustering
from metrics.small_world import small_worldness
from motifs.catalog import WeightVector, build_catalog
from network.degrees import InDegreeSpec
from utils.errors import InvalidSpecError
from .genetic import GaConfig

SMALLWORLD = 'smallworld'
MODULARITY = 'modularity'
OBJECTIVES = (SMALLWORLD, MODULARITY)


def smallworld_config(config, **overrides):
    """GaConfig for small-worldness: delta in-degrees K over optimizer.smallworld_k"""
    ks = config.get('optimizer.smallworld_k', [2, 3, 4, 5, 6])
    values = dict(n_eval=config.get('optimizer.smallworld_n', 100),
                  specs=[InDegreeSpec.delta(k) for k in ks])
    values.update(overrides)
    return GaConfig.from_config(config, **values)


def modularity_config(config, **overrides):
    """GaConfig for modularity: binomial p = 1/N_clust over optimizer.modularity_clusters"""
    clusters = config.get('optimizer.modularity_clusters', list(range(2, 21)))
    values = dict(n_eval=config.get('optimizer.modularity_n', 60),
                  specs=[InDegreeSpec.binomial(1.0 / c) for c in clusters],
                  clusters=list(clusters))
    values.update(overrides)
    return GaConfig.from_config(config, **values)


def _networks(wtilde, cfg, rng):
    catalog = build_catalog(cfg.motif_size)
    generator = MBNGenerator(catalog, tie_tolerance=cfg.tie_tolerance)
    weights = WeightVector(catalog, wtilde, adapt=cfg.adapt_weights)
    for s, spec in enumerate(cfg.specs):
        for sample in range(cfg.networks_per_evaluation):
            stream = rng.derive(s, sample)
            yield s, spec, stream, generator.generate(cfg.n_eval, spec, weights, stream.derive(0))


def objective_smallworld(wtilde, cfg, rng):
    """
    Mean small-worldness of generated networks

    Args:
        wtilde (array-like): Preferred weights
        cfg (GaConfig): n_eval, specs, networks_per_evaluation, reference_samples
        rng (RngStream): Random stream

    Returns:
        float: Mean S across specs
    """
    if not cfg.specs:
        raise InvalidSpecError("Small-worldness objective needs at least one in-degree spec")
    per_spec = [[] for _ in cfg.specs]
    for s, spec, stream, graph in _networks(wtilde, cfg, rng):
        per_spec[s].append(small_worldness(graph, spec, cfg.reference_samples, stream.derive(1)).S)
    return float(np.mean([np.mean(values) for values in per_spec]))


def objective_modularity(wtilde, cfg, rng):
    """
    Mean full-variant modularity under hierarchical clustering

    Args:
        wtilde (array-like): Preferred weights
        cfg (GaConfig): n_eval, specs paired with clusters, networks_per_evaluation
        rng (RngStream): Random stream

    Returns:
        float: Mean Q across specs
    """
    if not cfg.specs or len(cfg.clusters) != len(cfg.specs):
        raise InvalidSpecError("Modularity objective needs one cluster count per in-degree spec")
    per_spec = [[] for _ in cfg.specs]
    for s, spec, stream, graph in _networks(wtilde, cfg, rng):
        partition = hierarchical_clustering(hamming_distance_matrix(graph), cfg.clusters[s])
        per_spec[s].append(modularity(graph, partition, include_diagonal=cfg.include_diagonal).Q)
    return float(np.mean([np.mean(values) for values in per_spec]))


class MetricObjective:
    """Picklable (weights, rng) -> float wrapper around a named objective"""

    def __init__(self, kind, cfg):
        if kind not in OBJECTIVES:
            raise InvalidSpecError(f"Unknown objective {kind!r}, expected one of {OBJECTIVES}")
        self.kind = kind
        self.cfg = cfg

    def __call__(self, wtilde, rng):
        if self.kind == SMALLWORLD:
            return objective_smallworld(wtilde, self.cfg, rng)
        return objective_modularity(wtilde, self.cfg, rng)

"""
Genetic algorithm over masked weight vectors

Individuals are the free values of a WeightTemplate. Each generation keeps
the elite individuals and fills the rest of the population with children of
tournament winners: a uniform crossover of two winners (or a copy of one)
followed by Gaussian mutation of every free value. The mutation scale shrinks
linearly over the generations.
Fitness evaluations get their own derived random stream keyed by
(generation, index), so results do not depend on the worker count.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from utils.errors import InvalidSpecError


@dataclass
class GaConfig:
    population_size: int = 40
    generations: int = 60
    tournament_size: int = 3
    crossover_rate: float = 0.8
    mutation_scale: float = 0.3
    mutation_shrink: float = 1.0
    elite_count: int = 2
    init_range: float = 2.0
    networks_per_evaluation: int = 20
    n_eval: int = 100
    specs: list = field(default_factory=list)
    clusters: list = field(default_factory=list)
    reference_samples: int = 20
    adapt_weights: bool = True
    tie_tolerance: float = 1e-9
    include_diagonal: bool = True
    motif_size: int = 3
    jobs: int = 1

    def validate(self):
        for name in ('population_size', 'generations', 'tournament_size',
                     'networks_per_evaluation', 'n_eval', 'reference_samples', 'jobs'):
            if int(getattr(self, name)) < 1:
                raise InvalidSpecError(f"{name} must be positive, got {getattr(self, name)}")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise InvalidSpecError(f"crossover_rate must lie in [0, 1], got {self.crossover_rate}")
        if self.mutation_scale < 0 or self.init_range < 0 or self.mutation_shrink < 0:
            raise InvalidSpecError("mutation_scale, mutation_shrink and init_range must be non-negative")
        if not 0 <= self.elite_count < self.population_size:
            raise InvalidSpecError(f"elite_count must lie in [0, population_size), got {self.elite_count}")
        if self.clusters and len(self.clusters) != len(self.specs):
            raise InvalidSpecError("clusters must pair one cluster count with each in-degree spec")

    @classmethod
    def from_config(cls, config, **overrides):
        """
        GA settings from the 'optimizer' section of a ConfigManager

        Args:
            config (ConfigManager): Loaded configuration
            **overrides: Fields replacing configured values

        Returns:
            GaConfig: Settings
        """
        section = config.get('optimizer', {})
        names = ('population_size', 'generations', 'tournament_size', 'crossover_rate',
                 'mutation_scale', 'mutation_shrink', 'elite_count', 'init_range',
                 'networks_per_evaluation')
        values = {name: section[name] for name in names if name in section}
        values['reference_samples'] = config.get('metrics.reference_samples', 20)
        values['adapt_weights'] = config.get('generator.adapt_weights', True)
        values['tie_tolerance'] = config.get('generator.tie_tolerance', 1e-9)
        values['include_diagonal'] = config.get('metrics.modularity_include_diagonal', True)
        values.update(overrides)
        return cls(**values)

    def mutation_at(self, generation):
        """Mutation scale used to create generation `generation` (1-based)"""
        progress = (generation - 1) / self.generations
        return self.mutation_scale * max(0.0, 1.0 - self.mutation_shrink * progress)


@dataclass
class GaResult:
    best_weights: np.ndarray
    best_fitness: float
    trace: list
    evaluations: int

    def to_dict(self):
        return {
            'best_weights': self.best_weights.tolist(),
            'best_fitness': self.best_fitness,
            'trace': list(self.trace),
            'evaluations': self.evaluations,
        }


def _evaluate(objective, weights, rng):
    logger = logging.getLogger(__name__)
    try:
        value = float(objective(weights, rng))
    except Exception as e:
        logger.warning(f"Objective evaluation failed, scored -inf: {e}")
        return -np.inf
    if np.isnan(value):
        logger.warning("Objective returned NaN, scored -inf")
        return -np.inf
    return value


class GeneticOptimizer:
    def __init__(self, objective, template, cfg, rng):
        """
        Initialize optimizer

        Args:
            objective (callable): (full weight vector, RngStream) -> float, maximized;
                must be picklable when cfg.jobs > 1
            template (WeightTemplate): Free coordinates
            cfg (GaConfig): GA settings
            rng (RngStream): Random stream
        """
        cfg.validate()
        self.objective = objective
        self.template = template
        self.cfg = cfg
        self.rng = rng
        self.operators = rng.derive(0)
        self.logger = logging.getLogger(__name__)
        self.evaluations = 0

    def _evaluate_population(self, population, generation, offset=0):
        streams = [self.rng.derive(1, generation, offset + index) for index in range(len(population))]
        weights = [self.template.expand(alpha) for alpha in population]
        self.evaluations += len(weights)
        if self.cfg.jobs > 1 and len(weights) > 1:
            with ProcessPoolExecutor(max_workers=self.cfg.jobs) as pool:
                values = list(pool.map(_evaluate, [self.objective] * len(weights), weights, streams))
        else:
            values = [_evaluate(self.objective, w, s) for w, s in zip(weights, streams)]
        return np.array(values, dtype=float)

    def _tournament(self, population, fitness):
        entrants = self.operators.integers(len(population), size=self.cfg.tournament_size)
        return population[entrants[np.argmax(fitness[entrants])]]

    def _child(self, population, fitness, scale):
        child = self._tournament(population, fitness)
        if self.operators.random() < self.cfg.crossover_rate:
            second = self._tournament(population, fitness)
            mix = self.operators.random(self.template.dimension) < 0.5
            child = np.where(mix, child, second)
        return child + self.operators.normal(scale, self.template.dimension)

    def run(self):
        """
        Run the optimization

        Returns:
            GaResult: Best expanded weight vector, its fitness and the
                best-so-far trace (one entry per generation, initial included)
        """
        cfg = self.cfg
        dimension = self.template.dimension
        started = time.perf_counter()

        population = self.operators.uniform(-cfg.init_range, cfg.init_range,
                                             size=(cfg.population_size, dimension))
        fitness = self._evaluate_population(population, 0)
        best = int(np.argmax(fitness))
        best_alpha, best_fitness = population[best].copy(), float(fitness[best])
        trace = [best_fitness]

        for generation in range(1, cfg.generations + 1):
            order = np.argsort(-fitness, kind='stable')
            elites = population[order[:cfg.elite_count]]
            elite_fitness = fitness[order[:cfg.elite_count]]

            scale = cfg.mutation_at(generation)
            children = np.array([self._child(population, fitness, scale)
                                 for _ in range(cfg.population_size - cfg.elite_count)])
            child_fitness = self._evaluate_population(children, generation, offset=cfg.elite_count)

            population = np.vstack([elites, children])
            fitness = np.concatenate([elite_fitness, child_fitness])

            leader = int(np.argmax(fitness))
            if fitness[leader] > best_fitness:
                best_alpha, best_fitness = population[leader].copy(), float(fitness[leader])
            trace.append(best_fitness)
            failed = int((~np.isfinite(fitness)).sum())
            self.logger.info(f"Generation {generation}/{cfg.generations}: best {best_fitness:.6g}, "
                             f"{failed} failed evaluations")

        self.logger.info(f"GA finished after {self.evaluations} evaluations in "
                         f"{time.perf_counter() - started:.1f}s")
        return GaResult(best_weights=self.template.expand(best_alpha), best_fitness=best_fitness,
                        trace=trace, evaluations=self.evaluations)


def ga_optimize(objective, template, cfg, rng):
    """
    Maximize an objective over the masked weight vectors

    Args:
        objective (callable): (full weight vector, RngStream) -> float
        template (WeightTemplate): Free coordinates
        cfg (GaConfig): GA settings
        rng (RngStream): Random stream

    Returns:
        numpy.ndarray: Best-seen full weight vector, zero off the mask
    """
    return GeneticOptimizer(objective, template, cfg, rng).run().best_weights

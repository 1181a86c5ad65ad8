"""
Weight optimization: genetic algorithm, objectives, presets and arc interpolation
"""

from .presets import (
    PRESETS, MASKS, SMALLWORLD_MASK, MODULARITY_MASK, MODULARITY_ALT_MASK,
    WeightTemplate, get_preset, get_mask,
)
from .arc import angle, arc_interpolate, arc_points
from .genetic import GaConfig, GaResult, GeneticOptimizer, ga_optimize
from .objectives import (
    SMALLWORLD, MODULARITY, OBJECTIVES, MetricObjective,
    objective_smallworld, objective_modularity, smallworld_config, modularity_config,
)

__all__ = [
    'PRESETS', 'MASKS', 'SMALLWORLD_MASK', 'MODULARITY_MASK', 'MODULARITY_ALT_MASK',
    'WeightTemplate', 'get_preset', 'get_mask',
    'angle', 'arc_interpolate', 'arc_points',
    'GaConfig', 'GaResult', 'GeneticOptimizer', 'ga_optimize',
    'SMALLWORLD', 'MODULARITY', 'OBJECTIVES', 'MetricObjective',
    'objective_smallworld', 'objective_modularity', 'smallworld_config', 'modularity_config',
]

"""
Experiment harness: rank-sum test, result tables, sweeps and command handlers
"""

from .stats import RankSumResult, rank_sum_test
from .results import ResultTable
from .sweeps import (
    Condition, SweepSpec, parse_weights, load_weights, run_cells,
    sweep_motif_counts, empty_strategy_comparison, global_feature_eval, continuum_experiment,
)

__all__ = [
    'RankSumResult', 'rank_sum_test', 'ResultTable',
    'Condition', 'SweepSpec', 'parse_weights', 'load_weights', 'run_cells',
    'sweep_motif_counts', 'empty_strategy_comparison', 'global_feature_eval', 'continuum_experiment',
]

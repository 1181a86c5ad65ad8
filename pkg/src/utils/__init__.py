"""
Utility modules: configuration, logging and the shared exception hierarchy
"""

__version__ = "1.0.0"

from .logger import setup_logging
from .config_manager import ConfigManager
from .errors import (
    MBNError, ValidationError, InvalidSpecError, InvalidNodesError, EdgeListError,
    CatalogError, StrategyError, MetricError, DegenerateMetricError, GenerationError,
)

__all__ = [
    '__version__', 'setup_logging', 'ConfigManager',
    'MBNError', 'ValidationError', 'InvalidSpecError', 'InvalidNodesError', 'EdgeListError',
    'CatalogError', 'StrategyError', 'MetricError', 'DegenerateMetricError', 'GenerationError',
]

"""
Motif-based network generation
"""

from .scoring import ScoreVector, calculate_points_3, calculate_points_4, pick_target, pick_source
from .generator import MBNGenerator, generate_mbn

__all__ = [
    'ScoreVector', 'calculate_points_3', 'calculate_points_4', 'pick_target', 'pick_source',
    'MBNGenerator', 'generate_mbn',
]

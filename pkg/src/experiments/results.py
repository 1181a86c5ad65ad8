"""
Tidy result tables

A table holds one row per (condition, parameter, measure) with the sample
mean, standard deviation (ddof=1, 0 for single samples) and sample count,
plus optional rank-sum comparisons. Every written artifact carries the full
invocation; nothing time-dependent is written.
"""

import json
import logging
from pathlib import Path

import numpy as np
import pandas as pd

from utils import __version__
from utils.errors import InvalidSpecError

logger = logging.getLogger(__name__)

COLUMNS = ['condition', 'parameter', 'measure', 'mean', 'std', 'count']
COMPARISON_COLUMNS = ['condition', 'baseline', 'parameter', 'measure',
                      'statistic', 'p_greater', 'p_less', 'p_two_sided']
FORMATS = ('csv', 'json')


def _plain(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return value


class ResultTable:
    def __init__(self, invocation=None):
        """
        Initialize empty table

        Args:
            invocation (dict): Command, flags, seed; the package version is added
        """
        self.invocation = dict(invocation or {})
        self.invocation.setdefault('version', __version__)
        self._rows = []
        self._comparisons = []

    def add(self, condition, parameter, measure, values):
        """
        Aggregate samples into one row

        Args:
            condition (str): Network condition, e.g. 'rn' or 'delta:8'
            parameter: p, K or another sweep coordinate
            measure (str): Measure name, e.g. 'motif_8' or 'S'
            values (array-like): Samples
        """
        values = np.asarray(values, dtype=float)
        if values.size == 0:
            raise InvalidSpecError(f"No samples for {condition}/{parameter}/{measure}")
        std = float(values.std(ddof=1)) if values.size > 1 else 0.0
        self._rows.append({
            'condition': condition, 'parameter': _plain(parameter), 'measure': measure,
            'mean': float(values.mean()), 'std': std, 'count': int(values.size),
        })

    def add_comparison(self, condition, baseline, parameter, measure, result):
        """Record a RankSumResult of condition against baseline"""
        self._comparisons.append({
            'condition': condition, 'baseline': baseline, 'parameter': _plain(parameter),
            'measure': measure, 'statistic': result.statistic, 'p_greater': result.greater,
            'p_less': result.less, 'p_two_sided': result.two_sided,
        })

    def extend(self, other):
        self._rows.extend(other._rows)
        self._comparisons.extend(other._comparisons)

    @property
    def frame(self):
        return pd.DataFrame(self._rows, columns=COLUMNS)

    @property
    def comparisons(self):
        return pd.DataFrame(self._comparisons, columns=COMPARISON_COLUMNS)

    def lookup(self, condition, parameter, measure):
        """
        Row for one cell

        Returns:
            dict: Row values
        """
        for row in self._rows:
            if (row['condition'], row['parameter'], row['measure']) == (condition, parameter, measure):
                return dict(row)
        raise KeyError((condition, parameter, measure))

    def _header(self):
        return ''.join(f"# {key}: {self.invocation[key]}\n" for key in sorted(self.invocation))

    def to_csv(self):
        text = self._header() + self.frame.to_csv(index=False, float_format='%.10g', lineterminator='\n')
        if self._comparisons:
            text += '\n' + self.comparisons.to_csv(index=False, float_format='%.10g', lineterminator='\n')
        return text

    def to_json(self):
        document = {
            'invocation': self.invocation,
            'rows': self._rows,
            'comparisons': self._comparisons,
        }
        return json.dumps(document, indent=2, sort_keys=True, default=str) + '\n'

    def render(self, fmt='csv'):
        if fmt not in FORMATS:
            raise InvalidSpecError(f"Unknown output format {fmt!r}, expected one of {FORMATS}")
        return self.to_csv() if fmt == 'csv' else self.to_json()

    def write(self, path, fmt='csv'):
        """Write the rendered table to path"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(self.render(fmt))
        logger.info(f"Wrote {len(self._rows)} rows to {path}")

    def __len__(self):
        return len(self._rows)

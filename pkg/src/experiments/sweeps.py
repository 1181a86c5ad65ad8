"""
Experiment sweeps over network conditions

A condition names how networks are built:

    rn                  random network with the sweep's in-degree spec
    ws:<q>              directed Watts-Strogatz ring rewired with probability q
    delta:<id>          MBN promoting one motif class
    preset:<name>       MBN with a named optimized weight vector
    file:<path>         MBN with weights read from a JSON or text file
    zero                MBN with all-zero weights

MBN conditions accept an '@noadapt' suffix to switch weight adaptation off.
Every (condition, parameter, sample) cell owns a stream derived from the run
seed, so cells can run in any order or in parallel.
"""

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from scipy.integrate import trapezoid

from baselines.random_network import generate_random_network
from baselines.strategies import INTRA, INTER, build_strategy, empty_motif_count
from baselines.watts_strogatz import generate_ws_directed
from generation.generator import generate_mbn
from metrics.modularity import SIMPLIFIED, modularity
from metrics.partitioning import bisection_clustering, hamming_distance_matrix, hierarchical_clustering
from metrics.small_world import small_worldness
from motifs.catalog import build_catalog
from motifs.census import census
from network.degrees import DELTA, InDegreeSpec
from network.rng import RngStream
from optimization.arc import arc_points
from optimization.presets import get_preset
from utils.errors import InvalidSpecError, MetricError
from .results import ResultTable
from .stats import rank_sum_test

logger = logging.getLogger(__name__)

NOADAPT_SUFFIX = '@noadapt'
SMALLWORLD = 'smallworld'
MODULARITY = 'modularity'
DEFAULT_P_GRID = (0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5)


def load_weights(path, n_classes):
    """
    Weight vector from a file: a JSON list, a JSON object with 'best_weights',
    or whitespace/comma separated numbers

    Returns:
        numpy.ndarray: n_classes weights
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
        if Path(path).suffix.lower() == '.json':
            document = json.loads(text)
            values = document['best_weights'] if isinstance(document, dict) else document
        else:
            values = [float(v) for v in text.replace(',', ' ').split()]
    except (OSError, ValueError, KeyError) as e:
        raise InvalidSpecError(f"Cannot read weights from {path}: {e}") from e
    weights = np.asarray(values, dtype=float)
    if weights.shape != (n_classes,):
        raise InvalidSpecError(f"Weight file {path} holds {weights.size} values, expected {n_classes}")
    return weights


def parse_weights(text, size=3):
    """
    Preferred weights named by a weight source

    Args:
        text (str): 'delta:<id>', 'preset:<name>', 'file:<path>' or 'zero'
        size (int): Motif size

    Returns:
        numpy.ndarray: Weights, one per class
    """
    catalog = build_catalog(size)
    kind, _, argument = text.partition(':')
    if kind == 'zero' and not argument:
        return np.zeros(catalog.n_classes)
    if kind == 'delta':
        try:
            return catalog.delta(int(argument))
        except ValueError as e:
            raise InvalidSpecError(f"Invalid class id in {text!r}") from e
    if kind == 'preset':
        if size != 3:
            raise InvalidSpecError("Presets are three-node weight vectors")
        return get_preset(argument)
    if kind == 'file':
        return load_weights(argument, catalog.n_classes)
    raise InvalidSpecError(f"Unknown weight source {text!r}")


class Condition:
    """How the networks of one sweep row are built"""

    def __init__(self, name, kind, wtilde=None, adapt=True, q=None, tie_tolerance=1e-9):
        self.name = name
        self.kind = kind
        self.wtilde = wtilde
        self.adapt = adapt
        self.q = q
        self.tie_tolerance = tie_tolerance

    @classmethod
    def parse(cls, text, size=3, adapt=True, tie_tolerance=1e-9):
        """
        Parse a condition name

        Args:
            text (str): Condition, see module docstring
            size (int): Motif size for MBN weights
            adapt (bool): Configured weight adaptation; '@noadapt' switches it off
            tie_tolerance (float): Relative tie tolerance of MBN source picks

        Returns:
            Condition: Parsed condition
        """
        text = text.strip()
        if text == 'rn':
            return cls(text, 'rn')
        if text.startswith('ws:'):
            try:
                q = float(text[3:])
            except ValueError as e:
                raise InvalidSpecError(f"Invalid rewiring probability in {text!r}") from e
            return cls(text, 'ws', q=q)
        source = text
        if text.endswith(NOADAPT_SUFFIX):
            source, adapt = text[:-len(NOADAPT_SUFFIX)], False
        return cls(text, 'mbn', wtilde=parse_weights(source, size), adapt=adapt, tie_tolerance=tie_tolerance)

    def generate(self, n, spec, size, rng):
        if self.kind == 'rn':
            return generate_random_network(n, spec, rng)
        if self.kind == 'ws':
            if spec.kind != DELTA:
                raise InvalidSpecError("Watts-Strogatz conditions need a delta in-degree spec")
            return generate_ws_directed(n, spec.k, self.q, rng)
        return generate_mbn(n, spec, self.wtilde, size=size, rng=rng, adapt=self.adapt,
                            tie_tolerance=self.tie_tolerance)

    @property
    def promoted_class(self):
        """Class id promoted by a delta condition, else None"""
        if self.kind != 'mbn' or not self.name.startswith('delta:'):
            return None
        return int(np.argmax(self.wtilde)) + 1

    def __repr__(self):
        return f"Condition({self.name})"


@dataclass
class SweepSpec:
    n: int = 100
    seed: int = 0
    samples: int = 20
    motif_size: int = 3
    p_values: list = field(default_factory=lambda: list(DEFAULT_P_GRID))
    conditions: list = field(default_factory=lambda: ['rn', 'delta:7', 'delta:8', 'delta:9', 'delta:10'])
    adapt: bool = True
    tie_tolerance: float = 1e-9

    def validate(self):
        if self.samples < 1:
            raise InvalidSpecError(f"Sample count must be at least 1, got {self.samples}")
        if not self.p_values or any(not 0.0 < p <= 1.0 for p in self.p_values):
            raise InvalidSpecError(f"Connection probabilities must lie in (0, 1]: {self.p_values}")
        if self.n < self.motif_size:
            raise InvalidSpecError(f"Network size {self.n} is smaller than motif size {self.motif_size}")
        if not self.conditions:
            raise InvalidSpecError("Sweep needs at least one condition")


def run_cells(worker, cells, jobs=1):
    """Map worker over cells, in a process pool when jobs > 1; results keep cell order"""
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, cells, chunksize=max(1, len(cells) // (4 * jobs))))
    return [worker(cell) for cell in cells]


def _cell_stream(seed, condition, index, sample):
    return RngStream(seed).derive(condition, index, sample)


def _census_cell(cell):
    condition, n, spec, size, rng = cell
    started = time.perf_counter()
    graph = condition.generate(n, spec, size, rng)
    logger.debug(f"{condition.name} network in {time.perf_counter() - started:.2f}s")
    return census(graph, build_catalog(size)).counts


def _p_average(p_values, counts, empty_count):
    """
    Trapezoid mean over (0, p_max], anchored at the empty graph for p = 0

    For a grid ending at p = 0.5 this is twice the integral over (0, 0.5].
    """
    grid = np.concatenate([[0.0], p_values])
    anchor = np.zeros((1,) + counts.shape[1:])
    anchor[0, ..., 0] = empty_count
    return trapezoid(np.concatenate([anchor, counts]), grid, axis=0) / (grid[-1] - grid[0])


def sweep_motif_counts(spec, jobs=1):
    """
    Motif counts of every condition along a connection-probability grid

    Emits one row per (condition, p, motif class) plus the p-averaged summary
    rows (parameter 'p_avg'), and rank-sum comparisons of each delta
    condition's promoted class against every other condition.

    Args:
        spec (SweepSpec): Sweep description, including the adaptation and
            tie tolerance of its MBN conditions
        jobs (int): Worker processes

    Returns:
        ResultTable: Aggregated counts
    """
    spec.validate()
    size = spec.motif_size
    conditions = [Condition.parse(text, size, adapt=spec.adapt, tie_tolerance=spec.tie_tolerance)
                  for text in spec.conditions]
    p_values = sorted(float(p) for p in spec.p_values)

    cells = [
        (condition, spec.n, InDegreeSpec.binomial(p), size, _cell_stream(spec.seed, condition.name, i, s))
        for condition in conditions
        for i, p in enumerate(p_values)
        for s in range(spec.samples)
    ]
    logger.info(f"Motif sweep: {len(conditions)} conditions x {len(p_values)} p values x "
                f"{spec.samples} samples at N={spec.n}")
    counts = np.array(run_cells(_census_cell, cells, jobs)).reshape(
        len(conditions), len(p_values), spec.samples, -1)

    table = ResultTable({'command': 'sweep', 'n': spec.n, 'seed': spec.seed, 'samples': spec.samples,
                         'motif_size': size, 'p_values': p_values, 'conditions': spec.conditions})
    n_classes = counts.shape[-1]
    for c, condition in enumerate(conditions):
        for i, p in enumerate(p_values):
            for m in range(n_classes):
                table.add(condition.name, p, f"motif_{m + 1}", counts[c, i, :, m])
        averaged = _p_average(np.array(p_values), counts[c], empty_count=counts[c, 0, 0].sum())
        for m in range(n_classes):
            table.add(condition.name, 'p_avg', f"motif_{m + 1}", averaged[:, m])

    for c, condition in enumerate(conditions):
        promoted = condition.promoted_class
        if promoted is None:
            continue
        for o, other in enumerate(conditions):
            if o == c:
                continue
            for i, p in enumerate(p_values):
                result = rank_sum_test(counts[c, i, :, promoted - 1], counts[o, i, :, promoted - 1])
                table.add_comparison(condition.name, other.name, p, f"motif_{promoted}", result)
    return table


def empty_strategy_comparison(n, k_values, samples, seed=0, jobs=1, adapt=True, tie_tolerance=1e-9):
    """
    Empty three-node motif counts of MBN(delta 1), both strategies and RN per K

    Strategy rows hold the brute-force census count; '*_closed_form' rows
    hold the closed-form value.

    Returns:
        ResultTable: One row per (condition, K)
    """
    if samples < 1:
        raise InvalidSpecError(f"Sample count must be at least 1, got {samples}")
    catalog = build_catalog(3)
    conditions = [Condition.parse('delta:1', adapt=adapt, tie_tolerance=tie_tolerance), Condition.parse('rn')]
    table = ResultTable({'command': 'empty-compare', 'n': n, 'k_values': list(k_values),
                         'samples': samples, 'seed': seed})

    for strategy in (INTRA, INTER):
        for k in k_values:
            graph = build_strategy(strategy, n, k)
            table.add(strategy, k, 'motif_1', [census(graph, catalog)[1]])
            table.add(f"{strategy}_closed_form", k, 'motif_1', [empty_motif_count(strategy, n, k)])

    cells = [
        (condition, n, InDegreeSpec.delta(k), 3, _cell_stream(seed, condition.name, i, s))
        for condition in conditions
        for i, k in enumerate(k_values)
        for s in range(samples)
    ]
    counts = np.array(run_cells(_census_cell, cells, jobs)).reshape(len(conditions), len(k_values), samples, -1)
    for c, condition in enumerate(conditions):
        for i, k in enumerate(k_values):
            table.add(condition.name, k, 'motif_1', counts[c, i, :, 0])
    for i, k in enumerate(k_values):
        table.add_comparison('delta:1', 'rn', k, 'motif_1', rank_sum_test(counts[0, i, :, 0], counts[1, i, :, 0]))
    return table


def _metric_cell(cell):
    condition, n, spec, kind, n_clust, reference_samples, classes, include_diagonal, rng = cell
    graph = condition.generate(n, spec, 3, rng.derive(0))
    values = {}
    try:
        if kind == SMALLWORLD:
            report = small_worldness(graph, spec, reference_samples, rng.derive(1))
            values.update(S=report.S, C=report.C, L=report.L)
        else:
            partition = hierarchical_clustering(hamming_distance_matrix(graph), n_clust)
            bisected = bisection_clustering(graph, n_clust, rng=rng.derive(2))
            values['Q'] = modularity(graph, partition, include_diagonal=include_diagonal).Q
            values['Q_simplified'] = modularity(graph, partition, variant=SIMPLIFIED,
                                                include_diagonal=include_diagonal).Q
            values['Q_bisection'] = modularity(graph, bisected, include_diagonal=include_diagonal).Q
    except MetricError as e:
        logger.warning(f"{condition.name}: metric undefined for one sample: {e}")
    if classes:
        counts = census(graph, build_catalog(3))
        for m in classes:
            values[f"motif_{m}"] = counts[m]
    return values


def _aggregate(table, labelled_results, baseline='rn', focus=None):
    """Rows per (condition, parameter, measure); NaN-free samples only"""
    grouped = {}
    for (name, parameter), values in labelled_results:
        grouped.setdefault((name, parameter), []).append(values)
    for (name, parameter), samples in grouped.items():
        measures = sorted({key for sample in samples for key in sample})
        for measure in measures:
            column = [sample[measure] for sample in samples if measure in sample]
            table.add(name, parameter, measure, column)
    if focus is None:
        return
    for (name, parameter), samples in grouped.items():
        reference = grouped.get((baseline, parameter))
        if name == baseline or reference is None:
            continue
        ours = [s[focus] for s in samples if focus in s]
        theirs = [s[focus] for s in reference if focus in s]
        if ours and theirs:
            table.add_comparison(name, baseline, parameter, focus, rank_sum_test(ours, theirs))


def global_feature_eval(kind, n, params, samples, seed=0, conditions=None, ws_q=(), reference_samples=20, jobs=1,
                        adapt=True, tie_tolerance=1e-9, include_diagonal=True):
    """
    Small-worldness or modularity of each condition

    Args:
        kind (str): 'smallworld' (params are K values, delta in-degrees) or
            'modularity' (params are cluster counts, binomial p = 1/N_clust)
        n (int): Network size
        params (list): K values or cluster counts
        samples (int): Networks per cell
        seed (int): Run seed
        conditions (list): Condition names, defaults to the preset, its
            strongest single motifs and RN
        ws_q (iterable): Rewiring probabilities of Watts-Strogatz rows (small-worldness only)
        reference_samples (int): Random references per small-worldness value
        jobs (int): Worker processes
        adapt (bool): Weight adaptation of MBN conditions
        tie_tolerance (float): Relative tie tolerance of MBN source picks
        include_diagonal (bool): Keep the i = j modularity terms

    Returns:
        ResultTable: Rows per (condition, parameter, measure) with comparisons against RN
    """
    if kind not in (SMALLWORLD, MODULARITY):
        raise InvalidSpecError(f"Unknown global feature {kind!r}")
    if samples < 1:
        raise InvalidSpecError(f"Sample count must be at least 1, got {samples}")
    if conditions is None:
        conditions = (['preset:smallworld', 'delta:4', 'rn'] if kind == SMALLWORLD
                      else ['preset:modularity', 'delta:2', 'delta:4', 'rn'])
    names = list(conditions)
    if kind == SMALLWORLD:
        names += [f"ws:{q:g}" for q in ws_q]
    parsed = [Condition.parse(name, adapt=adapt, tie_tolerance=tie_tolerance) for name in names]

    cells, labels = [], []
    for condition in parsed:
        for i, value in enumerate(params):
            spec = InDegreeSpec.delta(value) if kind == SMALLWORLD else InDegreeSpec.binomial(1.0 / value)
            for s in range(samples):
                cells.append((condition, n, spec, kind, value, reference_samples, (), include_diagonal,
                              _cell_stream(seed, condition.name, i, s)))
                labels.append((condition.name, value))

    logger.info(f"Global {kind} evaluation: {len(parsed)} conditions x {len(params)} parameters x {samples} samples")
    results = run_cells(_metric_cell, cells, jobs)
    table = ResultTable({'command': 'global-eval', 'kind': kind, 'n': n, 'params': list(params),
                         'samples': samples, 'seed': seed, 'conditions': names,
                         'reference_samples': reference_samples})
    _aggregate(table, zip(labels, results), focus='S' if kind == SMALLWORLD else 'Q')
    return table


def continuum_experiment(kind, w_opt, left_class, right_class, steps, n, param, samples,
                         seed=0, reference_samples=20, jobs=1, adapt=True, tie_tolerance=1e-9,
                         include_diagonal=True):
    """
    Metric and motif counts along the great arcs from an optimized weight
    vector to two single-motif vectors

    Args:
        kind (str): 'smallworld' (param is K) or 'modularity' (param is N_clust, p = 1/N_clust)
        w_opt (array-like): Optimized weights, placed at phi = 0
        left_class (int): Class promoted at the negative end of the arc
        right_class (int): Class promoted at the positive end
        steps (int): Arc points per side
        n (int): Network size
        param (int): K or N_clust
        samples (int): Networks per arc point
        seed (int): Run seed
        reference_samples (int): Random references per small-worldness value
        jobs (int): Worker processes
        adapt (bool): Weight adaptation of MBN conditions
        tie_tolerance (float): Relative tie tolerance of MBN source picks
        include_diagonal (bool): Keep the i = j modularity terms

    Returns:
        ResultTable: Condition 'arc' rows indexed by phi, plus an 'rn' baseline row
    """
    if kind not in (SMALLWORLD, MODULARITY):
        raise InvalidSpecError(f"Unknown global feature {kind!r}")
    catalog = build_catalog(3)
    spec = InDegreeSpec.delta(param) if kind == SMALLWORLD else InDegreeSpec.binomial(1.0 / param)
    classes = (left_class, right_class)
    points = arc_points(w_opt, catalog.delta(left_class), catalog.delta(right_class), steps)

    cells, labels = [], []
    for index, (phi, w) in enumerate(points):
        condition = Condition('arc', 'mbn', wtilde=w, adapt=adapt, tie_tolerance=tie_tolerance)
        for s in range(samples):
            cells.append((condition, n, spec, kind, param, reference_samples, classes, include_diagonal,
                          _cell_stream(seed, 'arc', index, s)))
            labels.append(('arc', round(phi, 10)))
    baseline = Condition.parse('rn')
    for s in range(samples):
        cells.append((baseline, n, spec, kind, param, reference_samples, classes, include_diagonal,
                      _cell_stream(seed, 'rn', 0, s)))
        labels.append(('rn', 'baseline'))

    logger.info(f"Continuum {kind}: {len(points)} arc points x {samples} samples")
    results = run_cells(_metric_cell, cells, jobs)
    table = ResultTable({'command': 'continuum', 'kind': kind, 'n': n, 'param': param, 'steps': steps,
                         'left_class': left_class, 'right_class': right_class, 'samples': samples,
                         'seed': seed, 'w_opt': np.asarray(w_opt, dtype=float).tolist()})
    _aggregate(table, zip(labels, results))
    return table

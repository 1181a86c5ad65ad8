"""
Command handlers behind the command-line interface

Each handler takes the parsed argparse namespace and the ConfigManager,
writes its artifact to --out (stdout when omitted) and returns the exit code.
"""

import json
import logging
import sys
from pathlib import Path

from generation.generator import MBNGenerator
from metrics.clustering import clustering_coefficient
from metrics.modularity import SIMPLIFIED, modularity, intra_inter_edge_counts
from metrics.partitioning import bisection_clustering, hamming_distance_matrix, hierarchical_clustering
from metrics.paths import harmonic_path_length
from metrics.small_world import small_worldness
from motifs.catalog import WeightVector, build_catalog
from motifs.census import census
from network.degrees import InDegreeSpec
from network.edge_list import load_graph, write_edge_list
from network.rng import RngStream
from optimization.genetic import GeneticOptimizer
from optimization.objectives import MetricObjective, SMALLWORLD, modularity_config, smallworld_config
from optimization.presets import WeightTemplate, get_mask
from utils import __version__
from utils.errors import InvalidSpecError, MetricError
from .results import ResultTable
from .sweeps import (
    SweepSpec, continuum_experiment, empty_strategy_comparison, global_feature_eval,
    parse_weights, sweep_motif_counts,
)

logger = logging.getLogger(__name__)


def invocation(args):
    """Flags of a command as a plain dict, for artifact headers"""
    flags = {key: value for key, value in sorted(vars(args).items())
             if key not in ('handler', 'config') and value is not None}
    flags['version'] = __version__
    return flags


def emit(text, out):
    """Write text to a file, or to stdout when out is None"""
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
    logger.info(f"Wrote {path}")


def _format(args, config):
    return args.format or config.get('experiments.format', 'csv')


def _jobs(args, config):
    return args.jobs or config.get('experiments.jobs', 1)


def _samples(args, config):
    return args.samples or config.get('experiments.samples', 20)


def _generator_options(config):
    return {
        'adapt': config.get('generator.adapt_weights', True),
        'tie_tolerance': config.get('generator.tie_tolerance', 1e-9),
    }


def _include_diagonal(config):
    return config.get('metrics.modularity_include_diagonal', True)


def _parse_list(text, cast):
    if text is None:
        return None
    try:
        return [cast(item) for item in str(text).split(',') if item.strip()]
    except ValueError as e:
        raise InvalidSpecError(f"Invalid list {text!r}: {e}") from e


def cmd_generate(args, config):
    size = args.motif_size or config.get('generator.motif_size', 3)
    options = _generator_options(config)
    catalog = build_catalog(size)
    weights = WeightVector(catalog, parse_weights(args.weights, size), adapt=options['adapt'] and not args.no_adapt)
    generator = MBNGenerator(catalog, tie_tolerance=options['tie_tolerance'])
    graph = generator.generate(args.n, InDegreeSpec.parse(args.indegree), weights,
                               RngStream(args.seed), direction=args.direction)
    emit(write_edge_list(graph), args.out)
    return 0


def cmd_census(args, config):
    size = args.motif_size or config.get('generator.motif_size', 3)
    graph = load_graph(args.input)
    counts = census(graph, build_catalog(size))
    table = ResultTable(invocation(args))
    for class_id in range(1, len(counts.counts) + 1):
        table.add('graph', size, f"motif_{class_id}", [counts[class_id]])
    emit(table.render(_format(args, config)), args.out)
    return 0


def graph_metrics(graph, spec, reference_samples, n_clust, rng, include_diagonal=True):
    """
    Every global measure of one graph

    Args:
        graph (Digraph): Graph to measure
        spec (InDegreeSpec): In-degree law of the random references
        reference_samples (int): Random references for S
        n_clust (int): Cluster count for the partitions
        rng (RngStream): Random stream
        include_diagonal (bool): Keep the i = j modularity terms

    Returns:
        dict: C, L, S (with its reference terms), Q variants and the partition
    """
    paths = harmonic_path_length(graph).to_dict()
    report = {
        'C': clustering_coefficient(graph),
        'L': paths['L'],
        'reachable_pairs': paths['reachable_pairs'],
    }
    try:
        sw = small_worldness(graph, spec, reference_samples, rng.derive(0))
        report.update(S=sw.S, C_rand=sw.C_rand, L_rand=sw.L_rand, n_reference=sw.n_reference)
    except MetricError as e:
        logger.warning(f"Small-worldness undefined: {e}")
        report['S'] = None
    try:
        partition = hierarchical_clustering(hamming_distance_matrix(graph), n_clust)
        bisected = bisection_clustering(graph, n_clust, rng=rng.derive(1))
        intra, inter = intra_inter_edge_counts(graph, partition)
        report.update(
            Q=modularity(graph, partition, include_diagonal=include_diagonal).Q,
            Q_simplified=modularity(graph, partition, variant=SIMPLIFIED, include_diagonal=include_diagonal).Q,
            Q_bisection=modularity(graph, bisected, include_diagonal=include_diagonal).Q,
            intra_edges=intra, inter_edges=inter, partition=partition.assignment.tolist(),
        )
    except MetricError as e:
        logger.warning(f"Modularity undefined: {e}")
        report['Q'] = None
    return report


def cmd_metrics(args, config):
    graph = load_graph(args.input)
    reference_samples = args.ref_samples or config.get('metrics.reference_samples', 20)
    n_clust = min(args.clusters, graph.n)
    report = graph_metrics(graph, InDegreeSpec.parse(args.indegree), reference_samples,
                           n_clust, RngStream(args.seed), include_diagonal=_include_diagonal(config))

    fmt = args.format or 'json'
    if fmt == 'json':
        document = {'invocation': invocation(args), 'metrics': report}
        emit(json.dumps(document, indent=2, sort_keys=True) + '\n', args.out)
    else:
        table = ResultTable(invocation(args))
        for measure, value in sorted(report.items()):
            if isinstance(value, (int, float)) and not isinstance(value, bool):
                table.add('graph', n_clust, measure, [value])
        emit(table.render(fmt), args.out)
    return 0


def cmd_sweep(args, config):
    spec = SweepSpec(
        n=args.n,
        seed=args.seed,
        samples=_samples(args, config),
        motif_size=args.motif_size or config.get('generator.motif_size', 3),
        p_values=_parse_list(args.p_values, float) or config.get('experiments.p_grid'),
        conditions=_parse_list(args.conditions, str) or SweepSpec().conditions,
        **_generator_options(config),
    )
    table = sweep_motif_counts(spec, jobs=_jobs(args, config))
    table.invocation.update(invocation(args))
    emit(table.render(_format(args, config)), args.out)
    return 0


def cmd_empty_compare(args, config):
    table = empty_strategy_comparison(args.n, _parse_list(args.k_values, int), _samples(args, config),
                                      seed=args.seed, jobs=_jobs(args, config), **_generator_options(config))
    table.invocation.update(invocation(args))
    emit(table.render(_format(args, config)), args.out)
    return 0


def cmd_global_eval(args, config):
    default_params = ([2, 3, 4, 5, 6] if args.kind == SMALLWORLD else [2, 5, 10, 20])
    table = global_feature_eval(
        args.kind, args.n, _parse_list(args.params, int) or default_params, _samples(args, config),
        seed=args.seed,
        conditions=_parse_list(args.conditions, str),
        ws_q=_parse_list(args.ws_q, float) or (),
        reference_samples=args.ref_samples or config.get('metrics.reference_samples', 20),
        jobs=_jobs(args, config),
        include_diagonal=_include_diagonal(config),
        **_generator_options(config),
    )
    table.invocation.update(invocation(args))
    emit(table.render(_format(args, config)), args.out)
    return 0


def cmd_continuum(args, config):
    w_opt = parse_weights(args.weights or f"preset:{args.kind}")
    left, right = (args.left, args.right)
    if left is None:
        left = 4 if args.kind == SMALLWORLD else 2
    if right is None:
        right = 3
    param = args.param or (4 if args.kind == SMALLWORLD else 5)
    table = continuum_experiment(
        args.kind, w_opt, left, right, args.steps, args.n, param, _samples(args, config),
        seed=args.seed,
        reference_samples=args.ref_samples or config.get('metrics.reference_samples', 20),
        jobs=_jobs(args, config),
        include_diagonal=_include_diagonal(config),
        **_generator_options(config),
    )
    table.invocation.update(invocation(args))
    emit(table.render(_format(args, config)), args.out)
    return 0


def cmd_optimize(args, config):
    overrides = {'jobs': _jobs(args, config)}
    for flag, name in (('population', 'population_size'), ('generations', 'generations'),
                       ('networks', 'networks_per_evaluation'), ('n_eval', 'n_eval')):
        if getattr(args, flag) is not None:
            overrides[name] = getattr(args, flag)
    builder = smallworld_config if args.objective == SMALLWORLD else modularity_config
    cfg = builder(config, **overrides)

    if args.mask and args.mask[0].isdigit():
        mask = _parse_list(args.mask, int)
    else:
        mask = get_mask(args.mask or args.objective)
    template = WeightTemplate(mask)

    result = GeneticOptimizer(MetricObjective(args.objective, cfg), template, cfg, RngStream(args.seed)).run()
    document = {'invocation': invocation(args), 'mask': list(template.mask), **result.to_dict()}
    emit(json.dumps(document, indent=2, sort_keys=True) + '\n', args.out)
    return 0


def cmd_catalog_dump(args, config):
    size = args.motif_size or config.get('generator.motif_size', 3)
    document = build_catalog(size).to_dict()
    document['invocation'] = invocation(args)
    emit(json.dumps(document, sort_keys=True) + '\n', args.out)
    return 0


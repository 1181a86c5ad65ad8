#!/usr/bin/env python3
"""
Motif-based network design toolkit
Main entry point
"""

import argparse
import logging
import os
import sys

# Add src directory to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from experiments import commands
from optimization.objectives import OBJECTIVES
from utils.config_manager import ConfigManager
from utils.errors import ValidationError
from utils.logger import setup_logging

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors exit with the validation code"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def build_parser():
    """Build the argument parser with one sub-parser per command"""
    common = ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=0, help='Run seed (unsigned 64-bit)')
    common.add_argument('--out', help='Output path (stdout when omitted)')
    common.add_argument('--format', choices=['csv', 'json'], help='Result table format')
    common.add_argument('--jobs', type=int, help='Worker processes')
    common.add_argument('--config', help='JSON or YAML settings file')

    parser = ArgumentParser(prog='mbn', description='Motif-based network generation and experiments')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('generate', parents=[common], help='Generate one MBN as an edge list')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--indegree', required=True, help='binomial:<p> | delta:<K> | file:<path>')
    p.add_argument('--motif-size', type=int, choices=[3, 4])
    p.add_argument('--weights', default='zero', help='delta:<id> | preset:<name> | file:<path> | zero')
    p.add_argument('--no-adapt', action='store_true', help='Skip weight adaptation')
    p.add_argument('--direction', choices=['in', 'out'], default='in')
    p.set_defaults(handler=commands.cmd_generate)

    p = sub.add_parser('census', parents=[common], help='Motif census of an edge-list graph')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--motif-size', type=int, choices=[3, 4])
    p.set_defaults(handler=commands.cmd_census)

    p = sub.add_parser('metrics', parents=[common], help='Clustering, path length, S and Q of a graph')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--indegree', required=True, help='In-degree spec of the random references')
    p.add_argument('--ref-samples', type=int)
    p.add_argument('--clusters', type=int, default=10)
    p.set_defaults(handler=commands.cmd_metrics)

    p = sub.add_parser('sweep', parents=[common], help='Motif counts along a p grid')
    p.add_argument('--n', type=int, default=100)
    p.add_argument('--samples', type=int)
    p.add_argument('--motif-size', type=int, choices=[3, 4])
    p.add_argument('--p-values', help='Comma-separated connection probabilities')
    p.add_argument('--conditions', help='Comma-separated conditions, e.g. rn,delta:8,delta:16@noadapt')
    p.set_defaults(handler=commands.cmd_sweep)

    p = sub.add_parser('empty-compare', parents=[common], help='Empty-motif counts of MBN, strategies and RN')
    p.add_argument('--n', type=int, default=200)
    p.add_argument('--k-values', default='3,5,10,20')
    p.add_argument('--samples', type=int)
    p.set_defaults(handler=commands.cmd_empty_compare)

    p = sub.add_parser('global-eval', parents=[common], help='Small-worldness or modularity per condition')
    p.add_argument('--kind', choices=list(OBJECTIVES), required=True)
    p.add_argument('--n', type=int, default=200)
    p.add_argument('--params', help='K values (smallworld) or cluster counts (modularity)')
    p.add_argument('--samples', type=int)
    p.add_argument('--conditions')
    p.add_argument('--ws-q', help='Comma-separated Watts-Strogatz rewiring probabilities')
    p.add_argument('--ref-samples', type=int)
    p.set_defaults(handler=commands.cmd_global_eval)

    p = sub.add_parser('continuum', parents=[common], help='Metric along arcs from an optimum to single motifs')
    p.add_argument('--kind', choices=list(OBJECTIVES), required=True)
    p.add_argument('--weights', help='Optimum weight source (default: the preset of --kind)')
    p.add_argument('--left', type=int, help='Class id at negative phi')
    p.add_argument('--right', type=int, help='Class id at positive phi')
    p.add_argument('--steps', type=int, default=38)
    p.add_argument('--n', type=int, default=100)
    p.add_argument('--param', type=int, help='K (smallworld) or cluster count (modularity)')
    p.add_argument('--samples', type=int)
    p.add_argument('--ref-samples', type=int)
    p.set_defaults(handler=commands.cmd_continuum)

    p = sub.add_parser('optimize', parents=[common], help='Genetic search for weight vectors')
    p.add_argument('--objective', choices=list(OBJECTIVES), required=True)
    p.add_argument('--mask', help='Mask name or comma-separated class ids')
    p.add_argument('--population', type=int)
    p.add_argument('--generations', type=int)
    p.add_argument('--networks', type=int, help='Networks per evaluation')
    p.add_argument('--n-eval', type=int, help='Evaluation network size')
    p.set_defaults(handler=commands.cmd_optimize)

    p = sub.add_parser('catalog-dump', parents=[common], help='Motif classes, F and G as JSON')
    p.add_argument('--motif-size', type=int, choices=[3, 4])
    p.set_defaults(handler=commands.cmd_catalog_dump)

    return parser


def run(argv=None):
    """
    Parse arguments and run one command

    Args:
        argv (list): Arguments without the program name

    Returns:
        int: Exit code, 0 success, 1 invalid input, 2 runtime failure
    """
    args = build_parser().parse_args(argv)
    config = ConfigManager(args.config)
    setup_logging(config.get('logging', {}))
    logger = logging.getLogger(__name__)

    validation = config.validate_config()
    for warning in validation['warnings']:
        logger.warning(f"Configuration: {warning}")
    if not validation['valid']:
        for error in validation['errors']:
            logger.error(f"Configuration: {error}")
        return EXIT_VALIDATION

    try:
        return args.handler(args, config)
    except ValidationError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_VALIDATION
    except Exception as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_RUNTIME


def main():
    """Main entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()

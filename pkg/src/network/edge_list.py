"""
Edge-list text format

    n=<count>
    <source>,<target>
    ...

UTF-8, LF line endings, 0-based node ids, one edge per line, edges written in
(source, target) order. Blank lines are ignored on reading.
"""

import logging
from pathlib import Path

import numpy as np

from utils.errors import EdgeListError
from .digraph import Digraph

logger = logging.getLogger(__name__)


def write_edge_list(graph):
    """
    Serialize a graph

    Args:
        graph (Digraph): Graph to write

    Returns:
        str: Edge-list text ending with a newline
    """
    lines = [f"n={graph.n}"]
    lines.extend(f"{source},{target}" for source, target in graph.edges())
    return '\n'.join(lines) + '\n'


def read_edge_list(text):
    """
    Parse edge-list text

    Args:
        text (str): Edge-list text

    Returns:
        Digraph: Parsed graph
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines or not lines[0].startswith('n='):
        raise EdgeListError("Edge list must start with an 'n=<count>' header")

    try:
        n = int(lines[0][2:])
    except ValueError as e:
        raise EdgeListError(f"Invalid node count header: {lines[0]!r}") from e
    if n < 1:
        raise EdgeListError(f"Node count must be positive, got {n}")

    matrix = np.zeros((n, n), dtype=bool)
    for number, line in enumerate(lines[1:], start=2):
        parts = line.split(',')
        if len(parts) != 2:
            raise EdgeListError(f"Line {number}: expected 'source,target', got {line!r}")
        try:
            source, target = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise EdgeListError(f"Line {number}: non-integer node id in {line!r}") from e
        if not (0 <= source < n and 0 <= target < n):
            raise EdgeListError(f"Line {number}: node id outside [0, {n}) in {line!r}")
        if source == target:
            raise EdgeListError(f"Line {number}: self-loop {source},{target}")
        if matrix[source, target]:
            raise EdgeListError(f"Line {number}: duplicate edge {source},{target}")
        matrix[source, target] = True

    return Digraph(matrix)


def save_graph(graph, path):
    """Write a graph to an edge-list file"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(write_edge_list(graph))
    logger.info(f"Saved graph with {graph.n} nodes and {graph.edge_count} edges to {path}")


def load_graph(path):
    """Read a graph from an edge-list file"""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise EdgeListError(f"Cannot read edge list {path}: {e}") from e
    graph = read_edge_list(text)
    logger.debug(f"Loaded {graph!r} from {path}")
    return graph

"""
In-degree specifications and degree plans
"""

import logging
from pathlib import Path

import numpy as np

from utils.errors import GenerationError, InvalidSpecError

logger = logging.getLogger(__name__)

BINOMIAL = 'binomial'
DELTA = 'delta'
EXPLICIT = 'explicit'


class InDegreeSpec:
    """Distribution the per-node input counts are drawn from

    One of three variants: binomial (each node draws Binomial(N-1, p)), delta
    (every node gets exactly K inputs) or explicit (a fixed list of N counts).
    """

    def __init__(self, kind, p=None, k=None, values=None):
        self.kind = kind
        self.p = p
        self.k = k
        self.values = None if values is None else tuple(int(v) for v in values)

        if kind == BINOMIAL:
            if p is None or not (0.0 <= float(p) <= 1.0):
                raise InvalidSpecError(f"Binomial probability must lie in [0, 1], got {p}")
            self.p = float(p)
        elif kind == DELTA:
            if k is None or int(k) != k or k < 0:
                raise InvalidSpecError(f"Delta in-degree must be a non-negative integer, got {k}")
            self.k = int(k)
        elif kind == EXPLICIT:
            if not self.values:
                raise InvalidSpecError("Explicit in-degree list is empty")
            if any(v < 0 for v in self.values):
                raise InvalidSpecError("Explicit in-degrees must be non-negative")
        else:
            raise InvalidSpecError(f"Unknown in-degree variant: {kind}")

    @classmethod
    def binomial(cls, p):
        return cls(BINOMIAL, p=p)

    @classmethod
    def delta(cls, k):
        return cls(DELTA, k=k)

    @classmethod
    def explicit(cls, values):
        return cls(EXPLICIT, values=values)

    @classmethod
    def parse(cls, text):
        """
        Parse a command-line in-degree specification

        Args:
            text (str): "binomial:<p>", "delta:<K>" or "file:<path>"; the file
                holds N integers separated by whitespace or commas

        Returns:
            InDegreeSpec: Parsed specification
        """
        kind, _, argument = str(text).partition(':')
        kind = kind.strip().lower()
        if not argument:
            raise InvalidSpecError(f"In-degree spec needs an argument: {text!r}")
        try:
            if kind == BINOMIAL:
                return cls.binomial(float(argument))
            if kind == DELTA:
                return cls.delta(int(argument))
            if kind == 'file':
                content = Path(argument).read_text(encoding='utf-8')
                return cls.explicit([int(v) for v in content.replace(',', ' ').split()])
        except (ValueError, OSError) as e:
            raise InvalidSpecError(f"Invalid in-degree spec {text!r}: {e}") from e
        raise InvalidSpecError(f"Unknown in-degree variant in {text!r}")

    def validate(self, n):
        """
        Check that the specification can be drawn for n nodes

        Args:
            n (int): Network size
        """
        if n < 2:
            raise InvalidSpecError(f"Network needs at least 2 nodes, got {n}")
        if self.kind == DELTA and self.k > n - 1:
            raise InvalidSpecError(f"Delta in-degree K={self.k} exceeds N-1={n - 1}")
        if self.kind == EXPLICIT:
            if len(self.values) != n:
                raise InvalidSpecError(f"Explicit in-degree list has {len(self.values)} entries, expected {n}")
            if max(self.values) > n - 1:
                raise InvalidSpecError(f"Explicit in-degree {max(self.values)} exceeds N-1={n - 1}")

    def to_text(self):
        """Inverse of parse for binomial and delta specs"""
        if self.kind == BINOMIAL:
            return f"binomial:{self.p:g}"
        if self.kind == DELTA:
            return f"delta:{self.k}"
        return f"explicit:{len(self.values)}"

    def __eq__(self, other):
        if not isinstance(other, InDegreeSpec):
            return NotImplemented
        return (self.kind, self.p, self.k, self.values) == (other.kind, other.p, other.k, other.values)

    def __hash__(self):
        return hash((self.kind, self.p, self.k, self.values))

    def __repr__(self):
        return f"InDegreeSpec({self.to_text()})"


class DegreePlan:
    """Per-node target in-degrees and the inputs still unassigned"""

    def __init__(self, targets):
        self.targets = np.asarray(targets, dtype=np.int64).copy()
        self.unassigned = self.targets.copy()

    @property
    def n(self):
        return len(self.targets)

    @property
    def remaining(self):
        return int(self.unassigned.sum())

    def is_complete(self):
        return self.remaining == 0

    def assign(self, node):
        """Record one new input for node"""
        if self.unassigned[node] <= 0:
            raise GenerationError(f"Node {node} has no unassigned inputs left")
        self.unassigned[node] -= 1

    def __repr__(self):
        return f"DegreePlan(n={self.n}, total={int(self.targets.sum())}, remaining={self.remaining})"


def draw_in_degrees(spec, n, rng):
    """
    Draw target in-degrees for every node

    Args:
        spec (InDegreeSpec): In-degree distribution
        n (int): Network size
        rng (RngStream): Random stream

    Returns:
        DegreePlan: Plan with unassigned counts equal to the targets
    """
    spec.validate(n)
    if spec.kind == BINOMIAL:
        # Self-connections are excluded, so at most N-1 inputs are possible
        targets = rng.binomial(n - 1, spec.p, size=n)
    elif spec.kind == DELTA:
        targets = np.full(n, spec.k, dtype=np.int64)
    else:
        targets = np.array(spec.values, dtype=np.int64)

    logger.debug(f"Drew in-degrees for {n} nodes from {spec}: total {int(np.sum(targets))}")
    return DegreePlan(targets)

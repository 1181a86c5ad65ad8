"""
Exception hierarchy shared by all components

ValidationError subclasses signal bad user input (CLI exit code 1); the
remaining MBNError subclasses signal runtime failures (exit code 2).
"""


class MBNError(Exception):
    """Base class for every error raised by this package"""


class ValidationError(MBNError, ValueError):
    """Input rejected before any work is done"""


class InvalidSpecError(ValidationError):
    """In-degree spec, weight source or sweep spec is not usable"""


class InvalidNodesError(ValidationError):
    """Node tuple has duplicates or ids outside the graph"""


class EdgeListError(ValidationError):
    """Edge-list text is malformed"""


class CatalogError(ValidationError):
    """Unsupported motif size or code of the wrong length"""


class StrategyError(ValidationError):
    """Strategy parameters outside the construction's domain"""


class MetricError(MBNError, ArithmeticError):
    """A metric is undefined for the given graph"""


class DegenerateMetricError(MetricError):
    """A term of a metric is zero, infinite or otherwise degenerate"""


class GenerationError(MBNError, RuntimeError):
    """Internal invariant of the generation loop was violated"""

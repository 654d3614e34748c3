# Exception hierarchy shared by all modules and mapped to CLI exit codes

from typing import Optional


class ForestHilbertError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 2


class GraphParseError(ForestHilbertError, ValueError):
    """A graph file or inventory entry could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidEdgeError(ForestHilbertError, IndexError):
    """Edge index or endpoint outside the graph."""


class LoopContractionError(ForestHilbertError, ValueError):
    """Contraction of a loop was requested."""


class CyclicForestError(ForestHilbertError, ValueError):
    """An edge subset passed as a forest contains a cycle."""


class ForbiddenSampleError(ForestHilbertError, ValueError):
    """Evaluation point is a pole or otherwise excluded."""


class ConfigError(ForestHilbertError, ValueError):
    """Invalid setting or run configuration."""


class BudgetExceededError(ForestHilbertError, RuntimeError):
    """A configured size cap was exceeded."""

    exit_code = 3

    def __init__(self, cap: str, limit: int, needed: Optional[int] = None):
        self.cap = cap
        self.limit = limit
        self.needed = needed
        detail = f" (needs {needed})" if needed is not None else ""
        super().__init__(f"{cap} exceeded: limit {limit}{detail}")


class RecoveryError(ForestHilbertError, ValueError):
    """Input is not a Hilbert function this recovery can invert."""

    exit_code = 1

    def __init__(self, message: str, degree: Optional[int] = None):
        self.degree = degree
        if degree is not None:
            message = f"{message} (at degree {degree})"
        super().__init__(message)


def require_positive_t(t: int) -> int:
    """Validate the label count t."""
    if not isinstance(t, int) or isinstance(t, bool) or t < 1:
        raise ConfigError(f"t must be a positive integer, got {t!r}")
    return t

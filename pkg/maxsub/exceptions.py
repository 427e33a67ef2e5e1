"""Errors raised by the solver library and the benchmark harness."""


class MaxsubError(Exception):
    """Base class for every error raised by ``maxsub``."""


class InvalidConstraintError(MaxsubError, ValueError):
    """Cardinality bound outside ``1 <= k <= n_real``."""


class InvalidElementError(MaxsubError, IndexError):
    """Element id outside the ground set."""


class WrongObjectiveError(MaxsubError, TypeError):
    """Value function called on an instance of another kind."""


class InvalidSolutionError(MaxsubError, ValueError):
    """Solution violates a structural precondition (size, duplicates)."""


class SizeGuardError(MaxsubError, ValueError):
    """Exhaustive enumeration refused because the ground set is too large."""


class ConfigError(MaxsubError, ValueError):
    """Invalid solver, generator or experiment configuration."""


class EmptyInputError(MaxsubError, ValueError):
    """Aggregation requested over an empty collection."""


class ShapeError(MaxsubError, ValueError):
    """Matrix data with the wrong shape."""


class DataParseError(MaxsubError, ValueError):
    """Malformed instance file; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'line {line}: {message}'
        super().__init__(message)

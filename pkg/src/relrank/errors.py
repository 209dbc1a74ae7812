"""Exception hierarchy.

Each error carries a short ``category`` string and the process exit code the
command line maps it to (1 usage, 2 data, 3 numeric).
"""


class RelRankError(Exception):
    category = "error"
    exit_code = 2


class UsageError(RelRankError):
    category = "usage"
    exit_code = 1


class DataError(RelRankError):
    category = "data"
    exit_code = 2


class ParseError(DataError):
    category = "parse"

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyGraphError(DataError):
    category = "empty-graph"


class UnknownLabelError(DataError):
    category = "unknown-label"

    def __init__(self, label):
        self.label = label
        super().__init__(f"unknown node label {label!r}")


class InvalidNodeError(DataError):
    category = "invalid-node"


class UndefinedDistanceError(DataError):
    """Raised when a target is unreachable, so its distance is undefined."""

    category = "undefined-distance"


class DomainError(DataError):
    category = "domain"


class EmptyResultError(DataError):
    category = "empty-result"


class NumericError(RelRankError):
    category = "numeric"
    exit_code = 3


class ConvergenceError(NumericError):
    category = "convergence"

    def __init__(self, message, iterations):
        self.iterations = iterations
        super().__init__(message)


class DisconnectedGraphError(NumericError):
    category = "disconnected"


class SingularSystemError(NumericError):
    category = "singular"

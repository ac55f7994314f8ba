"""Exception hierarchy shared by every module."""


class LoceqError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(LoceqError, ValueError):
    """Unsupported field size or malformed run configuration."""


class InvalidOperation(LoceqError, ValueError):
    """An operator was called with a forbidden parameter (e.g. a zero scalar)."""


class InvalidArgument(LoceqError, ValueError):
    """An argument violates a precondition (incomplete vector, bad vertex, ...)."""


class InvalidPresentation(LoceqError, ValueError):
    """A (graph, D) pair is not a graphic presentation."""


class InvariantViolation(LoceqError, AssertionError):
    """Internal consistency check failed; always indicates a bug."""


class BudgetExceeded(LoceqError):
    """An exhaustive enumeration would exceed its configured size cap."""


class GraphFormatError(LoceqError, ValueError):
    """Text graph or system input could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class IdentityViolation(LoceqError):
    """A counting identity failed; ``report`` carries the counterexample."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report

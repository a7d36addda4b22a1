"""Exception types shared across the toolkit."""


class AfkitError(Exception):
    """Base class for all afkit errors."""


class UnknownArgumentError(AfkitError, ValueError):
    """An argument id was used that is not part of the framework."""


class MalformedTaskError(AfkitError, ValueError):
    """A task spec violates the task catalog (bad problem/semantics/query combination)."""


class OracleSizeError(AfkitError, RuntimeError):
    """The framework exceeds the exhaustive oracle's size cap."""


class BudgetExceededError(AfkitError, RuntimeError):
    """The search engine ran out of its node-expansion budget."""


class InvalidConfigError(AfkitError, ValueError):
    """A generator configuration is out of its valid parameter range."""


class FormatError(AfkitError, ValueError):
    """An instance file could not be parsed.

    ``line`` is the 1-based line number of the offending input line, when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InsufficientPoolError(AfkitError, ValueError):
    """A selection asked for more instances than the pools contain."""

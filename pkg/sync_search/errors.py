# sync_search/errors.py

"""
Exception hierarchy shared by every subpackage.
The CLI maps these onto exit codes; library code only raises them.
"""


class SyncSearchError(Exception):
    """Base class for all errors raised by sync_search."""


class AutomatonError(SyncSearchError, ValueError):
    """An automaton or transformation violates its invariants."""


class AutomatonFormatError(SyncSearchError, ValueError):
    """A line of automaton text could not be parsed."""

    def __init__(self, message: str, line_no: int = None, source: str = None):
        self.line_no = line_no
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line_no is not None:
            where += f"{line_no}:"
        super().__init__(f"{where} {message}".strip() if where else message)


class PoolError(SyncSearchError):
    """A pool is inconsistent (mixed sizes, bad header, unsorted members)."""


class InvalidArgumentError(SyncSearchError, ValueError):
    """A numeric precondition was violated."""


class ConfigError(SyncSearchError):
    """The YAML configuration is missing or invalid."""

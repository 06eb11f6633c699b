"""Exception hierarchy for the engine.

Three top branches matter to callers: ParseError for malformed input text,
DomainError for operations applied outside their mathematical preconditions,
GuardError for resource guards (clause explosion, oversized vocabularies).
The command line maps them to distinct exit codes.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for every error raised by this package."""


class ParseError(EngineError):
    """Malformed input text; carries an optional 1-based line/column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class DomainError(EngineError):
    """Operation applied outside its mathematical preconditions."""


class UniverseMismatchError(DomainError):
    """Two arguments live on different universes."""


class UndefinedConditioningError(DomainError):
    """Conditioning on an event of possibility zero (or rank infinity)."""


class SubnormalizedError(DomainError):
    """A query that only makes sense on a normalized distribution."""


class PartitionError(DomainError):
    """Cells fail to partition the universe or weights are not normalized."""


class NotDyadicError(DomainError):
    """Value is not of the form 2**-k, so it has no ordinal counterpart."""


class CoherenceError(DomainError):
    """Base fails the weight-coherence requirement of the operation."""


class InconsistentBaseError(DomainError):
    """Operation requires a (fully) consistent base."""


class ExpansionRefusedError(DomainError):
    """Expansion would make the base inconsistent."""


class GuardError(EngineError):
    """A resource guard tripped (clause or enumeration explosion)."""

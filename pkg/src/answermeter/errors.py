"""Exception hierarchy shared across the library, service and CLI."""

from __future__ import annotations


class AnswerMeterError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "internal"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.message = message
        self.field = field


class ValidationError(AnswerMeterError):
    """Input fails a precondition (empty text, bad slot number, bad threshold)."""

    code = "validation"


class ConflictError(AnswerMeterError):
    """Input collides with existing state (duplicate question, stale confirm)."""

    code = "conflict"


class NotFoundError(AnswerMeterError):
    """A referenced resource (question id, session, profile, file) does not exist."""

    code = "not_found"


class StateError(AnswerMeterError):
    """Operation is not legal in the current lifecycle state."""

    code = "state"


class ConfigurationError(AnswerMeterError):
    """Templates, catalogs or wordlists are malformed or incomplete."""

    code = "internal"


class GenerationExhaustedError(AnswerMeterError):
    """Every seeded suggestion draw collided with a configured wordlist."""

    code = "internal"


class StoreError(AnswerMeterError):
    """The profile store is corrupt or an I/O operation failed."""

    code = "internal"

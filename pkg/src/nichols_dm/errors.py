"""Shared exception types."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class CompletionError(RuntimeError):
    """Rewriting-system completion failed; carries the offending ambiguity."""

    def __init__(self, message, ambiguity=None):
        super().__init__(message)
        self.ambiguity = ambiguity

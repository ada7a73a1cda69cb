"""Exception types shared across the library."""


class SequenceError(Exception):
    """Base class for sequence-domain errors."""


class UndefinedTermError(SequenceError):
    """A term or coefficient was queried outside its domain.

    Finite sequences simply end, and [n k] does not exist for k > n or
    negative indices. This is a distinct outcome from an arithmetic
    violation such as a zero term.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class ZeroTermError(SequenceError):
    """A materialized term turned out to be zero."""

    def __init__(self, index, message=None):
        super().__init__(message or f"term at index {index} is zero")
        self.index = index


class NonIntegralEntryError(SequenceError):
    """A row or column extraction required an entry that is not an integer."""

    def __init__(self, n, k, value):
        super().__init__(f"entry [{n} {k}] = {value} is not an integer")
        self.n = n
        self.k = k
        self.value = value


class InternalCheckError(RuntimeError):
    """A cross-check that can only fail on an arithmetic bug has failed."""

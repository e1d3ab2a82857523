"""Exception types shared across the package."""


class QuditError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QuditError, ValueError):
    """An argument violates a documented precondition (bad digit, shape, or position)."""


class CapacityError(QuditError):
    """A requested register or operator would exceed the amplitude budget."""


class ConsistencyError(QuditError):
    """An internal numerical guarantee failed; this signals a bug, not bad input."""

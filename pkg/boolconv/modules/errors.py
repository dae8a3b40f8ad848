"""Exception hierarchy for boolconv."""


class BoolconvError(Exception):
    """Base class of every error raised by boolconv."""

    exit_code = 1


class StructuralError(BoolconvError, ValueError):
    """A value is malformed or mixes objects from different algebras."""


class PreconditionError(BoolconvError, ValueError):
    """An operation was called outside of its domain."""


class ResourceCapError(BoolconvError, RuntimeError):
    """An exhaustive computation would exceed a configured cap."""

    exit_code = 3

    def __init__(self, what: str, cap_name: str, cap: int, requested: int):
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested
        super().__init__(f"{what}: {cap_name}={cap} exceeded (requested {requested})")


class InvariantViolation(BoolconvError, AssertionError):
    """Two independent computations of the same quantity disagree."""

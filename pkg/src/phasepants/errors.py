"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An enumeration or matrix exceeded its configured size guard."""


class InvariantViolation(AssertionError):
    """Internal combinatorial invariant failed; carries the offending data."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

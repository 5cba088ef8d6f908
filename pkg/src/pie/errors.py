"""Shared exception types."""


class AlgorithmFault(Exception):
    """An internal consistency guarantee was violated.

    Raised when two independent constructions of the same object disagree,
    or when a combinatorial procedure leaves its proven operating regime
    (nonpositive intermediate part, duplicate part, loop guard exceeded).
    This is always a bug signal, never a recoverable condition.
    """

"""Exceptions raised by the decision procedures."""

from typing import Any


class UniqordError(Exception):
    """Base class of every error raised by this project."""


class InputError(UniqordError, ValueError):
    """The caller violated an operation's contract."""


class InternalInconsistencyError(UniqordError, RuntimeError):
    """A post-condition failed or two independent criteria disagree.

    This always signals a bug and is never turned into a verdict.
    """


class NotIntervalGraphError(InputError):
    """The input graph has no interval representation."""

    def __init__(self, message: str, obstruction: Any):
        """Store the obstruction certifying that the graph is not an interval graph."""
        super().__init__(message)
        self.obstruction = obstruction


class NotIntervalOrderError(InputError):
    """The input order contains two disjoint incomparable 2-chains."""

    def __init__(self, message: str, witness: tuple[int, int, int, int]):
        """Store the quadruple (a, b, c, d) with a < b, c < d and no cross relation."""
        super().__init__(message)
        self.witness = witness


class OracleBoundError(InputError):
    """The brute-force oracle refuses graphs above its vertex bound."""

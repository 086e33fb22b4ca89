"""Exception hierarchy for the gridlink package.

Everything raised deliberately by this package derives from
:class:`GridlinkError`, so callers can catch one type at an API boundary.
"""

from __future__ import annotations


class GridlinkError(Exception):
    """Base class for all errors raised by gridlink."""


class DomainError(GridlinkError):
    """An argument is outside the domain a function is defined on.

    Examples: a grid size below 1, a padding below 0, a chain handed to a
    routine that only accepts a specific residue class of sizes.
    """


class InvalidChainError(GridlinkError):
    """A vertex sequence violates the structural rules for polygonal chains.

    Carries ``edge_indices``: the 0-based indices of the offending edges
    (for a repeated-vertex problem, the index of the degenerate edge).
    """

    def __init__(self, message: str, edge_indices: tuple[int, ...] = ()):
        super().__init__(message)
        self.edge_indices = edge_indices


class UnsupportedRadicalError(GridlinkError):
    """An exact length falls outside the radical forms this package models.

    Lengths are kept as sums of rational multiples of square roots of
    square-free integers.  A squared length whose square root does not
    reduce to that shape (within the factoring effort bound) is refused
    rather than approximated.
    """


class ImpossibleRequestError(GridlinkError):
    """The requested object provably does not exist.

    The message states the mathematical reason in plain language.
    """


class UnimplementedPatternError(GridlinkError):
    """The object may exist, but no construction in this package produces it."""


class ConstructionFailure(GridlinkError):
    """An internal construction did not certify.

    This signals a bug or an input outside the validated range, not a
    mathematical impossibility; the message says which construction and
    which check failed.
    """


class NotMinimalError(GridlinkError):
    """A chain certifies structurally but misses the minimum link count."""


class OracleViolation(GridlinkError):
    """A cross-check between two independent computations disagreed."""


class DocumentFormatError(GridlinkError):
    """A serialized document could not be parsed or has the wrong version.

    Distinct from the verification errors so tooling can separate "bad
    file" from "valid file describing a bad chain".
    """

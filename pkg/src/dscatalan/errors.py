"""Exception types shared across the library.

All of them subclass ValueError so callers that do not care about the
fine-grained category can catch a single type.
"""

from __future__ import annotations


class NonSquareMatrixError(ValueError):
    """A determinant was requested for a non-square matrix."""


class SingularMatrixError(ValueError):
    """A unique solution was requested but the system is singular."""


class RankDeficientError(ValueError):
    """A matrix expected to have full row rank has none of its maximal minors non-zero."""


class ColoopDeletionError(ValueError):
    """Rank-preserving deletion was asked to remove a coloop."""


class BadCardinalityError(ValueError):
    """A set argument has the wrong number of elements."""


class WrongArityError(ValueError):
    """A partial f-vector assignment does not have exactly rank-many entries."""


class InconsistentConventionError(ValueError):
    """Position 1 of an f-vector always carries the value 1 (the empty face)."""


class NotADSBasisError(ValueError):
    """The known positions do not determine the f-vector.

    When the partial data is linearly consistent, ``completions`` holds two
    distinct full f-vectors agreeing with it, as a concrete ambiguity
    certificate.  When the data is not even consistent, ``completions`` is
    None.
    """

    def __init__(self, labels, completions=None):
        self.labels = tuple(labels)
        self.completions = completions
        if completions is None:
            msg = f"positions {self.labels} are inconsistent with any f-vector"
        else:
            msg = f"positions {self.labels} do not determine the f-vector"
        super().__init__(msg)

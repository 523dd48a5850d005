"""Exception hierarchy for the escobar package."""

from __future__ import annotations


class EscobarError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(EscobarError, ValueError):
    """A numeric or combinatorial parameter is out of range (k < 1, n < 3, ...)."""


class InvalidGeometryError(EscobarError, ValueError):
    """A domain or region description is malformed: open chain, self-intersecting
    boundary, chord leaving the domain, overlapping regions, and so on."""


class NotApplicableError(EscobarError):
    """A closed-form routine was asked about a domain outside its scope
    (e.g. an exact regular-polygon value for a non-regular domain)."""


class ConstructionFailedError(EscobarError):
    """A construction could not produce a valid tuple with the given
    parameters (legs overrunning an edge, stripes taller than the box, ...)."""


class BudgetExceededError(EscobarError):
    """A search refused to start or stopped because its evaluation budget
    would be (or was) exhausted.

    Attributes
    ----------
    estimate : float
        Estimated or actual number of evaluations required.
    budget : float
        The configured ceiling.
    """

    def __init__(self, message: str, estimate: float = 0.0, budget: float = 0.0):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget

"""Exception types shared across the package."""

from __future__ import annotations


class EquisymError(Exception):
    """Base class for all library errors."""


class GroupSpecError(EquisymError, ValueError):
    """Malformed group spec string or invalid construction data."""


class OrderBoundError(GroupSpecError):
    """Group closure exceeded the configured order bound."""


class SignatureError(EquisymError, ValueError):
    """Signature is malformed or not hyperbolic."""


class RiemannHurwitzError(EquisymError, ValueError):
    """(group order, signature) pair fails the Riemann-Hurwitz integrality test."""


class SubgroupError(EquisymError, ValueError):
    """Claimed subgroup is not contained in the ambient group."""


class InvalidVectorError(EquisymError, ValueError):
    """Operation requires a valid generating vector."""


class BudgetError(EquisymError, RuntimeError):
    """A configured search budget was exceeded."""


class CatalogError(EquisymError, RuntimeError):
    """A catalog entry failed verification; the message names the entry."""


class InternalCheckError(EquisymError, RuntimeError):
    """A double-entry consistency check failed; indicates a bug, not bad input."""

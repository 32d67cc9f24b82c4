"""
Domain exceptions for the simplicial DGLA toolkit.

Diagnostic operations (validators, axiom verification, oracle comparison)
return reports instead of raising. The exceptions below are reserved for
inputs that cannot be computed with at all.
"""

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from simplicial_dgla.models.reports import ValidationReport


class SimplicialDglaError(Exception):
    """Base class for every error raised by the toolkit."""

    pass


class DimensionMismatchError(SimplicialDglaError, ValueError):
    """
    Raised when vectors, matrices or subspaces have incompatible shapes.

    Example: bracketing a length-3 vector in a 2-dimensional Lie algebra.
    """

    pass


class LieAlgebraError(SimplicialDglaError, ValueError):
    """
    Raised when structure constants do not define a Lie algebra.

    The message names the failing law (antisymmetry or Jacobi) and the
    basis indices of the witness.
    """

    pass


class SubspaceMembershipError(SimplicialDglaError, ValueError):
    """Raised when a vector is required to lie in a subspace and does not."""

    pass


class LevelOutOfRangeError(SimplicialDglaError, ValueError):
    """Raised when a simplicial level or degree is outside the stored range."""

    pass


class InvalidPresentationError(SimplicialDglaError):
    """
    Raised when a crossed module or 2-crossed module fails its axioms.

    Attributes:
        report: ValidationReport listing every violated axiom
    """

    def __init__(self, message: str, report: Optional["ValidationReport"] = None):
        super().__init__(message)
        self.report = report


class InvalidSimplicialError(SimplicialDglaError):
    """
    Raised when an operation needs a valid simplicial Lie algebra and gets none.

    Attributes:
        report: ValidationReport listing every violated simplicial identity
    """

    def __init__(self, message: str, report: Optional["ValidationReport"] = None):
        super().__init__(message)
        self.report = report


class ConstructionError(SimplicialDglaError):
    """
    Raised when a generator cannot determine a bracket from the face maps.

    This only happens when the presentation passed validation but the
    face-solved bracket leaves a non-zero residual.
    """

    pass


class TruncationError(SimplicialDglaError):
    """Raised when the Moore length is not below the stored truncation level."""

    pass


class OracleMismatchError(SimplicialDglaError):
    """Raised when the built DGLA disagrees with the superfield oracle."""

    pass

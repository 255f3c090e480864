"""Exception types raised by belldiag.

Every error subclasses :class:`BellDiagError`, which itself subclasses
``ValueError`` so that callers who do not care about the fine-grained
taxonomy can catch a single built-in type. Messages name the violated
invariant.
"""


class BellDiagError(ValueError):
    """Base class for all belldiag errors."""


class InvalidMatrixError(BellDiagError):
    """Input is not a finite numeric matrix of the expected shape."""


class NonSquareError(BellDiagError):
    """Operation requires a square matrix."""


class NotHermitianError(BellDiagError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class DimensionTooSmallError(BellDiagError):
    """Dimension parameter d must be at least 2."""


class DimensionMismatchError(BellDiagError):
    """Matrix shape is incompatible with the stated local dimensions."""


class WrongDimensionError(BellDiagError):
    """Operation is only defined for a specific dimension (usually d=3)."""


class InvalidCoefficientsError(BellDiagError):
    """Coefficient matrix violates non-negativity or normalization."""


class InvalidBlochError(BellDiagError):
    """Bloch matrix is not the image of any valid coefficient matrix."""


class NonPrimeDimensionError(BellDiagError):
    """Operation requires a prime dimension."""

"""Exception types shared across the package."""


class PolyDotError(Exception):
    """Base class for all polydot_cmpc errors."""


class ZeroInverseError(PolyDotError):
    """Zero has no multiplicative inverse."""


class LengthMismatchError(PolyDotError):
    """Parallel sequences (support/coefficients/points) differ in length."""


class SingularMatrixError(PolyDotError):
    """A generalized Vandermonde system is not invertible."""


class TargetNotInSupportError(PolyDotError):
    """Requested coefficient exponent is outside the polynomial support."""


class IndivisibleDimensionsError(PolyDotError):
    """Matrix dimension is not divisible by the requested partition count."""


# The protocol layer reports the same condition under this name.
DivisibilityError = IndivisibleDimensionsError


class DimensionMismatchError(PolyDotError):
    """Inner dimensions of a matrix product do not agree."""


class ShapeMismatchError(PolyDotError):
    """A block or coefficient has the wrong shape."""


class SetupExhaustedError(PolyDotError):
    """Could not find invertible evaluation points within the retry budget."""

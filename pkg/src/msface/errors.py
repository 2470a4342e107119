"""Exception types raised across the pipeline."""


class MsfaceError(Exception):
    """Base class for all errors raised by this package."""


# --- sample codes / catalog ---

class MalformedCode(MsfaceError, ValueError):
    """Sample code has the wrong length or an invalid alphabet."""


class OutOfRange(MsfaceError, ValueError):
    """Sample code field is syntactically fine but outside the allowed range."""


class DuplicateKey(MsfaceError):
    """The same sample key appears in more than one file."""


class IoFailure(MsfaceError, OSError):
    """File system read or write failed, or a file is truncated."""


class EmptySplit(MsfaceError):
    """A train/test split left some person with zero train or test images."""


# --- imaging ---

class UnsupportedFormat(MsfaceError):
    """Image container or bit depth is not supported."""


class RaggedRows(MsfaceError, ValueError):
    """Thermal CSV rows do not all have the same length."""


class NonNumericCell(MsfaceError, ValueError):
    """Thermal CSV contains a cell that does not parse as a number."""


class BadFraction(MsfaceError, ValueError):
    """Saturation fraction outside [0, 0.5)."""


class TooSmall(MsfaceError, ValueError):
    """Image is too small for the requested operation."""


# --- features ---

class ShapeMismatch(MsfaceError, ValueError):
    """Matrices that must share a shape do not."""


class EmptyTraining(MsfaceError, ValueError):
    """No training samples were provided."""


class BadDimension(MsfaceError, ValueError):
    """Requested mask size or coefficient count is out of bounds."""


# --- matcher ---

class DimensionMismatch(MsfaceError, ValueError):
    """Feature vectors do not share one dimension."""


class BadExponent(MsfaceError, ValueError):
    """Distance exponent must be positive."""


class LengthMismatch(MsfaceError, ValueError):
    """Prediction and truth lists differ in length."""


class EmptyInput(MsfaceError, ValueError):
    """An operation that needs at least one element got none."""


# --- fusion ---

class LabelMismatch(MsfaceError, ValueError):
    """Distance tables being fused do not share row/column labels."""


class WeightCountMismatch(MsfaceError, ValueError):
    """Number of fusion weights differs from number of tables."""

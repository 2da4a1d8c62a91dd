from typing import Optional


class BottError(Exception):
    """Base class for every error raised by the engine"""


class MatrixFormatError(BottError):
    """Malformed matrix text or a violated Bott matrix invariant"""

    def __init__(
        self, message: str, row: Optional[int] = None, column: Optional[int] = None
    ):
        self.row = row
        self.column = column
        if row is not None and column is not None:
            message = f"{message} (row {row}, column {column})"
        elif row is not None:
            message = f"{message} (line {row})"
        super().__init__(message)


class DimensionError(BottError):
    """Dimension out of range, mismatched dimensions or index out of range"""


class NotNormalFormError(BottError):
    """An operation that needs block normal form received another matrix"""


class SizeLimitError(BottError):
    """The requested computation exceeds the configured size limit"""


class NotInGroupError(BottError):
    """A motion that is not an element of the Bott group"""


class RelationViolationError(BottError):
    """A candidate homomorphism breaks a defining relation"""


class LatticeIndexError(BottError):
    """The lattice image of a monomorphism has even index"""


class ExtensionIdentityError(BottError):
    """An identity of the group extension comparison does not hold"""


class SmithOverflowError(BottError, OverflowError):
    """A Smith normal form entry left the signed 64-bit range"""

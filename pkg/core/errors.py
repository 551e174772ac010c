"""
Exception hierarchy for midspec operations.
"""


class MidspecError(Exception):
    """
    Base exception for every failed operation.

    Attributes:
        message -- explanation of the error
        source -- operation where the error occurred
    """

    def __init__(self, message, source=None):
        self.message = message
        self.source = source
        super().__init__(self.message)

    def __str__(self):
        if self.source:
            return f"Error in {self.source}: {self.message}"
        return f"Error: {self.message}"


class ParameterError(MidspecError):
    """Argument outside its documented range, or precondition violated."""


class DimensionError(MidspecError):
    """Shape or length mismatch between operands."""


class CapExceededError(MidspecError):
    """Request above a desk-scale cap."""

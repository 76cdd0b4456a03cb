"""Exception hierarchy shared by every module.

Every error derives from :class:`NeuralError` (a ``ValueError``), so callers
can catch the whole family at once. The CLI maps subclasses to exit codes:
:class:`ParseError` exits 2, :class:`AmbientTooLarge` exits 3, and everything
else exits 4.
"""


class NeuralError(ValueError):
    """Base class for all library errors."""


class ParseError(NeuralError):
    """Malformed text input. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IndexOutOfRange(NeuralError):
    pass


class OverlappingFactors(NeuralError):
    pass


class LengthMismatch(NeuralError):
    pass


class AmbientMismatch(NeuralError):
    pass


class AmbientTooLarge(NeuralError):
    pass


class SizeMismatch(NeuralError):
    pass


class BadParameters(NeuralError):
    pass


class NotAMember(NeuralError):
    pass


class ArityMismatch(NeuralError):
    pass


class HomValidationError(NeuralError):
    """A map that is not neural-ideal preserving.

    ``variables`` names the offending variables (source ``x<i>`` indices for
    non-linear images and duplicates, target indices for missed targets).
    """

    label = "INVALID"

    def __init__(self, message, variables=()):
        self.variables = tuple(variables)
        super().__init__(message)


class NonLinearImage(HomValidationError):
    label = "NONLINEAR IMAGE"


class DuplicateTarget(HomValidationError):
    label = "DUPLICATE TARGET"


class MissedTarget(HomValidationError):
    label = "MISSED TARGET"

class LabError(ValueError):
    """Base class for input and precondition errors raised by the library."""


class SpanError(LabError):
    """A function vector does not lie in the span of a subspace basis."""


class NormalizationError(LabError):
    """A functional was expected to have dual norm exactly one."""


class NotIsometryError(LabError):
    """A linear map required to be an isometry is not one."""


class AmbiguityError(LabError):
    """Evaluation functionals cannot be told apart where a unique match is needed."""


class SizeError(LabError):
    """Input exceeds a documented size bound."""


class TheoremViolation(AssertionError):
    """A computed object contradicts a statement that must hold on finite models."""

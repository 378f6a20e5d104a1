"""Exception hierarchy shared across the package."""


class CuspLabError(Exception):
    """Base class for all library errors."""


class ConductorMismatch(CuspLabError):
    """Cyclotomic operands live in fields with different conductors."""


class NotRational(CuspLabError):
    """A value expected to be rational has nonzero cyclotomic part."""


class FourthRootError(CuspLabError):
    """A value does not normalize to a fourth root of unity."""


class ZeroInput(CuspLabError):
    """An operation requiring a nonzero input received zero."""


class BaseFieldMismatch(CuspLabError):
    """Laurent series or matrices over different residue fields were mixed."""


class PrecisionError(CuspLabError):
    """Insufficient precision to decide a question, or access past the window."""


class SingularToPrecision(CuspLabError):
    """A matrix or series is not invertible at the tracked precision."""


class ShapeError(CuspLabError):
    """Matrix or block dimensions are inconsistent."""


class ConstraintError(CuspLabError):
    """A solver precondition (invertibility, symplectic constraint) failed."""


class TermBudgetExceeded(CuspLabError):
    """An exhaustive character sum would exceed the configured term budget."""


class TrivialDeltaError(CuspLabError):
    """The trivial twisting character gives no reducibility-at-one branch."""

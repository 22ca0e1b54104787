"""Exception types raised by the toolkit.

Everything derives from ToolkitError, which is a ValueError so that
callers who do not care about the fine-grained distinctions can catch
the usual builtin.
"""


class ToolkitError(ValueError):
    """Base class for all toolkit-specific errors."""


class DimensionMismatch(ToolkitError):
    """Operands have incompatible shapes."""


class BadDimension(ToolkitError):
    """A dimension argument is not a positive integer."""


class NotHermitian(ToolkitError):
    """A matrix required to be Hermitian is not, beyond tolerance."""


class EmptyFamily(ToolkitError):
    """A vector family that must be nonempty is empty."""


class OddDimension(ToolkitError):
    """An operation requires an even dimension."""


class DimensionTooSmall(ToolkitError):
    """The dimension is below the minimum the construction supports."""


class NotAntisymmetricUnitary(ToolkitError):
    """A matrix fails the antisymmetric-unitary certificate."""


class PairingFailed(ToolkitError):
    """Eigenvalues could not be matched into (lam, -lam) pairs."""


class DecompositionFailed(ToolkitError):
    """A factorization did not reproduce its input within tolerance."""


class NonpositiveState(ToolkitError):
    """A matrix expected to be positive semidefinite has a negative eigenvalue."""


class UnknownFamily(ToolkitError):
    """An unrecognized named vector family was requested."""


class InconsistentResult(ToolkitError):
    """An internal cross-check failed; results would be untrustworthy."""

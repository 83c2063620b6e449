"""Exception types shared across the package."""


class ResourceCapError(RuntimeError):
    """Raised when a requested size exceeds a configured cap."""


class DivisibilityError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class SymmetryError(ValueError):
    """Raised when a polynomial expected to be symmetric is not."""

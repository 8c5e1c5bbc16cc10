"""Exception and warning types shared across the package."""


class InvalidInputError(ValueError):
    """Raised when arguments violate an operation's preconditions."""


class NotInvertibleError(ArithmeticError):
    """Raised when a shift-operator expression has no inverse on polynomials."""


class VerificationError(AssertionError):
    """Raised when two routes that must agree produce different results."""


class OutOfRegionWarning(UserWarning):
    """A generating-function coefficient was requested outside its counting region."""


class SizeGuardWarning(UserWarning):
    """A computation was requested beyond the default desk-scale size guard."""

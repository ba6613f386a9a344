"""Exception types shared across the package."""


class LiecertError(Exception):
    """Base class."""


class InputError(LiecertError, ValueError):
    """Malformed or mismatched input (dimensions, indices, file syntax)."""


class InvariantViolation(LiecertError):
    """An exact internal consistency check failed."""


class PreconditionError(LiecertError):
    """A construction precondition (regularity, genericity) does not hold."""

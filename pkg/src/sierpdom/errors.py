"""Exception types shared across the package."""


class SierpdomError(Exception):
    """Base class for all package errors."""


class InvalidInputError(SierpdomError, ValueError):
    """Malformed or out-of-range input (bad word, rank, weight vector, file)."""


class CapacityError(SierpdomError):
    """Requested instance exceeds the configured size limit."""


class OutOfRegimeError(SierpdomError, ValueError):
    """Construction requested for parameters outside its regime."""


class SelfCheckError(SierpdomError):
    """An internal consistency check failed; indicates a bug, not bad input."""

"""Exception types shared across the package."""


class HomLeibnizError(Exception):
    """Base class for all errors raised by this package."""


class AmbientMismatch(HomLeibnizError, ValueError):
    """Two objects live in vector spaces of different dimension."""


class ValidationError(HomLeibnizError, ValueError):
    """An input fails the axioms required by an operation.

    ``report`` carries the violation list when one is available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or []


class CapExceeded(HomLeibnizError):
    """A computation would exceed the configured size cap."""


class IntegrityError(HomLeibnizError, RuntimeError):
    """An internal consistency check failed.

    This signals a formula or enumeration bug rather than bad input.
    """

"""Exception hierarchy shared by all opuc modules."""


class OpucError(Exception):
    """Base class for every error raised by this package."""


class ModulusError(OpucError, ValueError):
    """A Verblunsky coefficient lies outside the open unit disk."""

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class SchemaError(OpucError, ValueError):
    """Malformed sequence or run description.

    ``path`` points at the offending element of the JSON document, e.g.
    ``$.tail.p``.
    """

    def __init__(self, message, path="$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class DomainError(OpucError, ValueError):
    pass


class EmptyError(OpucError, ValueError):
    pass


class RangeError(OpucError, ValueError):
    pass


class ResourceError(OpucError, RuntimeError):
    """Requested enumeration order exceeds the configured ceiling."""


class DivergenceError(OpucError, ArithmeticError):
    """The sequence kind fails the summability hypothesis of the quantity."""


class KindError(OpucError, TypeError):
    """Operation is not defined for this sequence kind."""


class AliasError(OpucError, ValueError):
    """Fourier index too large for the quadrature grid."""

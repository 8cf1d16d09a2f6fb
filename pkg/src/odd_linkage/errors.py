"""Exception types shared by every module."""


class DomainError(ValueError):
    """Input is well formed but outside the domain of the operation."""


class PreconditionError(DomainError):
    """A stated precondition does not hold (e.g. a chain step with nonzero omega)."""


class ParseError(ValueError):
    """Text input could not be parsed."""

class DomainError(ValueError):
    """Input is well formed but outside the domain of a computation."""


class IntegralityError(DomainError):
    """A weight does not satisfy the integrality assumed by the integral formula."""

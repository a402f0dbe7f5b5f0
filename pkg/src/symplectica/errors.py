"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class ModelError(DomainError):
    """A Lie model failed validation (Jacobi, closedness, nondegeneracy)."""


class InvariantError(RuntimeError):
    """An identity that must hold exactly was violated.

    Raised when a computed object contradicts a structural identity, e.g. a
    sign convention that fails to close ``[Lambda, d] = delta``.
    """

"""Exact computations for symplectic invariants of Lie groups, symplectic models and secondary classes."""

from .errors import DomainError, InvariantError, ModelError

__version__ = "0.1.0"

__all__ = ["DomainError", "InvariantError", "ModelError", "__version__"]

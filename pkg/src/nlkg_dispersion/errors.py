"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the validity domain of the requested operation."""


class NonConvergence(RuntimeError):
    """An iterative scheme exhausted its budget without reaching tolerance."""

"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a mathematical precondition (bad field, rank, parameters...)."""


class BudgetExceededError(DomainError):
    """An exhaustive computation would exceed the configured enumeration budget."""

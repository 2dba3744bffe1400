"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent user input."""


class ContractViolation(RuntimeError):
    """An operation was called on data violating its precondition."""

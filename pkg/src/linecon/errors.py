class DomainError(ValueError):
    """Argument outside the domain of an operation (bad node, size mismatch)."""


class ContractViolation(RuntimeError):
    """A precondition or a proven structural property failed to hold."""


class UndefinedOperation(ValueError):
    """Operation not defined for this kind of congruence (e.g. frequency of Total)."""


class EnumerationCapExceeded(RuntimeError):
    pass

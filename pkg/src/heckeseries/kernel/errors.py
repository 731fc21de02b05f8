class KernelError(Exception):
    pass


class InexactDivision(KernelError, ArithmeticError):
    """An exact division left a remainder; never truncate silently."""


class SymmetryViolation(KernelError, ValueError):
    """A polynomial expected to be symmetric is not."""


class UsageError(KernelError, ValueError):
    pass

"""Error hierarchy shared by the library and the command line.

Every error carries the process exit code the CLI reports for it:
1 for bad input, 2 for an exceeded enumeration budget, 3 for a failed
internal post-condition.
"""


class ChainCodeError(Exception):
    exit_code: int = 1

    def __init__(self, message: str, exit_code: int | None = None):
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(self.message)


class InputError(ChainCodeError):
    exit_code = 1


class RingError(InputError):
    """Invalid ring descriptor, or arithmetic mixing two different rings."""


class NotAUnitError(InputError):
    pass


class PolyParseError(InputError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at offset {position}")


class SpecFileError(InputError):
    pass


class ZeroCodeError(InputError):
    """Raised by operations that presuppose a nonzero code."""


class DomainError(InputError):
    pass


class BudgetExceededError(ChainCodeError):
    exit_code = 2

    def __init__(self, needed: int, budget: int, hint: str = ""):
        self.needed = needed
        self.budget = budget
        message = f"instance too large: {needed} candidates exceed budget {budget}"
        if hint:
            message = f"{message}; {hint}"
        super().__init__(message)


class InvariantViolation(ChainCodeError):
    exit_code = 3

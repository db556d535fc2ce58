"""Exception hierarchy. Every error carries a stable ``code`` string used by the CLI."""


class DualPolyError(Exception):
    code = "error"


class RingSpecError(DualPolyError, ValueError):
    code = "ring_spec"


class ParseError(DualPolyError, ValueError):
    code = "parse"

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at offset {position}"
        super().__init__(message)
        self.position = position


class NotAUnitError(DualPolyError, ArithmeticError):
    code = "not_unit"


class RingMismatchError(DualPolyError, ValueError):
    code = "ring_mismatch"


class NotLocalError(DualPolyError, ValueError):
    code = "not_local"


class PreconditionError(DualPolyError, ValueError):
    code = "precondition"


class BudgetExceeded(DualPolyError, RuntimeError):
    code = "budget"

"""Exception hierarchy shared by every layer."""


class EuclidError(Exception):
    pass


class DivisionByZero(EuclidError, ZeroDivisionError):
    pass


class NegativeRadicand(EuclidError, ValueError):
    pass


class DepthLimitExceeded(EuclidError):
    def __init__(self, depth: int, limit: int, step: int | None = None):
        self.depth = depth
        self.limit = limit
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"sqrt nesting depth {depth} exceeds limit {limit}{where}")


class PreconditionViolated(EuclidError):
    """A kernel or construction operation was called outside its domain.

    ``name`` identifies the violated precondition (e.g. ``"distinct(A, B)"``);
    ``step`` is filled in by the script interpreter.
    """

    def __init__(self, name: str, step: int | None = None):
        self.name = name
        self.step = step
        where = f"step {step}: " if step is not None else ""
        super().__init__(f"{where}precondition violated: {name}")


class AssertionFailed(EuclidError):
    def __init__(self, step: int, pred: str, operands: str):
        self.step = step
        self.pred = pred
        self.operands = operands
        super().__init__(f"step {step}: assertion {pred} failed on {operands}")


class ParseError(EuclidError):
    def __init__(self, line: int, col: int, message: str, expected: frozenset[str] = frozenset()):
        self.line = line
        self.col = col
        self.message = message
        self.expected = expected
        super().__init__(f"{line}:{col}: {message}")


class UnknownIdentifier(ParseError):
    pass


class DuplicateDefinition(ParseError):
    pass


class ArityMismatch(ParseError):
    pass


class EmptyTrace(EuclidError):
    pass

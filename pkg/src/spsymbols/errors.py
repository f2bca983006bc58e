"""Exception types raised on precondition and consistency failures."""


class SymbolError(ValueError):
    """Base class for domain errors; ``code`` is the machine-readable tag."""

    code = "domain-error"

    def __init__(self, message="", **detail):
        super().__init__(message)
        self.detail = detail


class DivisionByZero(SymbolError, ZeroDivisionError):
    code = "division-by-zero"


class DependenceError(SymbolError):
    code = "dependent"


class DimensionError(SymbolError):
    code = "dimension-mismatch"


class PreconditionError(SymbolError):
    code = "precondition"


class ZeroVectorError(PreconditionError):
    code = "zero-vector"


class IsotropyError(SymbolError):
    code = "isotropy-violation"


class DegenerateError(SymbolError):
    code = "degenerate"


class FactorizationError(SymbolError):
    """Raised when X = W m' fails; this is a theorem, so it means a bug."""

    code = "factorization-mismatch"


class NonTerminationError(SymbolError):
    code = "non-termination"

    def __init__(self, message="", trace=None, **detail):
        super().__init__(message, **detail)
        self.trace = trace


class BoundTooSmall(SymbolError):
    code = "bound-too-small"

"""Exception hierarchy.

Everything raised on purpose derives from :class:`FPCountError`.  Errors that
mean "a configured limit was hit" derive from :class:`CapExceeded` so the CLI
can map them to their own exit code.
"""


class FPCountError(Exception):
    pass


class ValidationError(FPCountError, ValueError):
    """Malformed network, function, configuration or input file."""


class FormulaSyntaxError(ValidationError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class CapExceeded(FPCountError):
    """A configured size limit was exceeded."""


class ArityCapExceeded(CapExceeded):
    pass


class BruteCapExceeded(CapExceeded):
    pass


class BudgetExceeded(CapExceeded):
    pass


class DecompositionTooWide(CapExceeded):
    pass


class EngineNotApplicable(FPCountError):
    """The system does not meet an engine's precondition."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class NonLinearFunction(EngineNotApplicable):
    pass


class NotAndOrSystem(EngineNotApplicable):
    pass


class ScopeNotCovered(FPCountError):
    """A tree decomposition has no bag containing some vertex's scope."""

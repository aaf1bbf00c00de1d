"""Exception types shared across the package."""


class NlfieldError(Exception):
    pass


class NotMonicError(NlfieldError):
    pass


class ReduciblePolynomialError(NlfieldError):
    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"polynomial is reducible; nontrivial factor: {factor}")


class FieldMismatchError(NlfieldError):
    pass


class ModeMismatchError(NlfieldError):
    pass


class UndecidedNumericallyError(NlfieldError):
    """Raised when the precision ladder hits its hard cap without a decision."""


class SignlessError(NlfieldError):
    """The zero element carries no sign; it is handled by the constant part."""


class NotProjectivizableError(NlfieldError):
    """Zero-trace elements lie in the trace ideal and have no T=1 representative."""


class NotAnAutomorphismError(NlfieldError):
    pass


class BandwidthError(NlfieldError):
    """Quadrature grid too coarse for the requested trigonometric bandwidth."""


class NotInvertibleError(NlfieldError):
    pass


class ParseError(NlfieldError):
    def __init__(self, message, position=None, expected=None):
        self.position = position
        self.expected = expected
        if position is not None:
            message = f"{message} at position {position}"
        if expected:
            message = f"{message} (expected {expected})"
        super().__init__(message)


class SessionError(NlfieldError):
    """Bad session document: unknown names, duplicates, or broken refs."""

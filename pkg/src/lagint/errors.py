class ParameterError(ValueError):
    """An argument lies outside the supported domain."""


class NumericalInconsistencyError(ArithmeticError):
    """A floating-point result failed its internal consistency check.

    Raised by the quadrature engine when the imaginary part of a result that
    must be real exceeds the configured bound, which usually means too few
    nodes were used.
    """

    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value

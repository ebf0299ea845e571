# xhermite/errors.py


class XHermiteError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidParametersError(XHermiteError, ValueError):
    """Bad family indices, degrees, or numeric bounds."""


class DegreeGapError(InvalidParametersError):
    """A degree or level index falls in a gap of the admissible set."""

    def __init__(self, message: str, admissible=None):
        super().__init__(message)
        self.admissible = list(admissible or [])


class ZeroDenominatorError(XHermiteError, ZeroDivisionError):
    pass


class IncomparableError(XHermiteError, TypeError):
    """Quasi-Gaussians with different Gaussian signs (or float scales) cannot be combined."""


class NonDecayingStateError(XHermiteError, ValueError):
    pass


class VerificationFailure(XHermiteError, RuntimeError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report

"""Exception hierarchy shared by every module of the package."""


class AsmDppError(Exception):
    """Base class for domain errors raised by asmdpp."""


class InexactDivision(AsmDppError, ArithmeticError):
    pass


class DivisionByZero(AsmDppError, ZeroDivisionError):
    pass


class PoleHit(AsmDppError, ZeroDivisionError):
    """A substitution sent a denominator to zero."""


class NotExpandable(AsmDppError, ValueError):
    """The denominator has no invertible constant term in the expansion variable."""


class DegenerateParameters(AsmDppError, ValueError):
    pass


class DegenerateSpectralParameters(DegenerateParameters):
    pass


class GradingViolation(AsmDppError, ValueError):
    pass


class IndexOutOfRange(AsmDppError, IndexError):
    pass


class SizeTooSmall(AsmDppError, ValueError):
    pass


class InvalidObject(AsmDppError, ValueError):
    pass


class InvalidASM(InvalidObject):
    pass


class TSystemZeroDivision(AsmDppError, ZeroDivisionError):
    """An interior T-system value vanished; ``site`` holds its (i, j, k)."""

    def __init__(self, site):
        super().__init__(f"T-system value vanished at (i, j, k) = {site}")
        self.site = site


class ConfigError(AsmDppError, ValueError):
    pass

"""Exception hierarchy shared by the numerical modules and the CLI."""


class AdjointError(Exception):
    """Base class for every error raised by this package."""


class InvalidMapError(AdjointError):
    """A map or function is not admissible for the requested operation."""


class NumericalError(AdjointError):
    """A numerical procedure could not produce a certified answer."""


class DegreeZeroError(InvalidMapError):
    pass


class NotLFMError(InvalidMapError):
    pass


class DegenerateError(InvalidMapError):
    pass


class ZeroDenominatorError(InvalidMapError):
    pass


class NotSelfMapError(InvalidMapError):
    pass


class PoleInDiskError(InvalidMapError):
    pass


class IndeterminateError(NumericalError):
    """Numerator and denominator both vanish at the evaluation point."""


class NonConvergenceError(NumericalError):
    pass


class OriginNotSupportedError(NumericalError):
    pass


class BranchPointProximityError(NumericalError):
    pass


class SingularPointError(NumericalError):
    """A branch value sits at 0 or escaped to infinity at this point."""


class PoleCollisionError(NumericalError):
    pass


class RadiusTooSmallError(NumericalError):
    pass


class JitterExhaustedError(NumericalError):
    pass

"""Exception types raised by the library."""


class TwopointError(Exception):
    """Base class for domain errors."""


class NegativePowerOfA(TwopointError):
    pass


class TruncationTooCoarse(TwopointError):
    pass


class ResultLevelEmpty(TwopointError):
    pass


class ZeroElement(TwopointError):
    pass


class WeightConstraint(TwopointError):
    pass


class DepthOverflow(TwopointError):
    pass


class InsufficientLevel(TwopointError):
    pass

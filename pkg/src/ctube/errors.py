"""Exception hierarchy shared by every ctube module."""


class CTubeError(Exception):
    """Base class for all errors raised by ctube."""


class InvalidLength(CTubeError, ValueError):
    pass


class InvalidRank(CTubeError, ValueError):
    pass


class RankMismatch(CTubeError, ValueError):
    pass


class WingUndefined(CTubeError, ValueError):
    pass


class NotRigid(CTubeError, ValueError):
    pass


class NotExchangePair(CTubeError, ValueError):
    pass


class InShift(CTubeError, ValueError):
    """The object lies in add(Sigma T), where the functor Hom(T, -) vanishes."""


class BadDirection(CTubeError, ValueError):
    pass


class UsageError(CTubeError, ValueError):
    pass


class Undefined(CTubeError, ValueError):
    pass


class InternalInvariantBroken(CTubeError, AssertionError):
    """A mathematical invariant the library relies on failed to hold."""


class LaurentViolation(InternalInvariantBroken):
    pass


class GradingViolation(InternalInvariantBroken):
    pass

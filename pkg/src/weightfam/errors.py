"""Exception hierarchy for weightfam."""


class WeightFamError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRank(WeightFamError, ValueError):
    pass


class UnknownAlgebra(WeightFamError, ValueError):
    pass


class OrbitCapExceeded(WeightFamError):
    def __init__(self, cap: int):
        super().__init__(f"orbit enumeration exceeded cap of {cap} elements")
        self.cap = cap


class CriticalLevel(WeightFamError, ValueError):
    pass


class WrongType(WeightFamError, ValueError):
    pass


class NotBounded(WeightFamError, ValueError):
    pass


class EmptyInput(WeightFamError, ValueError):
    pass


class InvalidParameters(WeightFamError, ValueError):
    pass


class SpecError(WeightFamError, ValueError):
    """A problem-spec file is malformed; the message names the offending field."""

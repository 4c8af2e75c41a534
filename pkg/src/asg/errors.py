"""Exception hierarchy shared by every stage of the pipeline."""


class SemigroupError(Exception):
    """Base class; ``stage`` names the module that raised it."""

    stage = "asg"


class MalformedInput(SemigroupError, ValueError):
    stage = "input"


class SingularBasis(SemigroupError, ValueError):
    stage = "linalg"


class RankDeficient(SemigroupError):
    stage = "cone"


class NotSimplicial(SemigroupError):
    stage = "cone"


class OutsideCone(SemigroupError, ValueError):
    stage = "membership"


class NotInSemigroup(SemigroupError, ValueError):
    stage = "membership"


class ResourceLimit(SemigroupError):
    stage = "limits"


class InvalidTuple(SemigroupError, ValueError):
    stage = "conductor"


class NotNumerical(SemigroupError, ValueError):
    stage = "conductor"

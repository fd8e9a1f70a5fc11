"""Exception hierarchy.

Every domain error carries a stable ``code`` (the class name) so the CLI can
emit it in structured error reports.
"""


class ToricError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self):
        return type(self).__name__


class SingularMatrix(ToricError):
    pass


class DimensionMismatch(ToricError):
    pass


class Unbounded(ToricError):
    pass


class Empty(ToricError):
    pass


class Degenerate(ToricError):
    pass


class OriginNotInterior(ToricError):
    pass


class InvalidFan(ToricError):
    pass


class NotSimplicial(ToricError):
    pass


class NotSimplicialCone(ToricError):
    pass


class NotRankOne(ToricError):
    pass


class RaysDoNotSpan(ToricError):
    pass


class NotAmple(ToricError):
    pass


class NoAmpleDivisor(ToricError):
    pass


class NotComplete(NoAmpleDivisor):
    pass


class InternalVerificationFailed(ToricError):
    """A postcondition recheck failed. Indicates a bug, never bad input."""


class EquivalenceViolation(ToricError):
    """The rank-one characterizations disagreed. Indicates a bug."""

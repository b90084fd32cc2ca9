"""Exception types shared across the package.

Everything derives from ``TautfillError`` (a ``ValueError``), so callers can
catch domain failures uniformly; the CLI maps them to exit status 1.
"""


class TautfillError(ValueError):
    """Base class for all domain errors raised by this package."""


class MalformedSlope(TautfillError):
    """A slope pair is not in canonical reduced form, or is (0, 0)."""


class DeltaOutOfRange(TautfillError):
    """A degeneracy slope lies in the excluded band [-2, 2)."""


class UnsupportedCoordinateFlip(TautfillError):
    """Orientation reversal with boundary slope 2 is only defined on {inf, 1}."""


class ObstructedMeridian(TautfillError):
    """Meridian/degeneracy-locus intersection is too large for any filling."""


class OddProngCount(TautfillError):
    """Boundary singularity count must be even for a co-orientable foliation."""


class ParityMismatch(TautfillError):
    """Index shift and orbit length must agree mod 2 in the reversing case."""


class RangeViolation(TautfillError):
    """An integer argument escapes its required range."""


class DegenerateDelta(TautfillError):
    """The slope p/q of a triple lands in the excluded band [-2, 2)."""


class SwitchViolation(TautfillError):
    """A weight vector fails the cusp relation at some switch."""


class SlopeOutsideInterval(TautfillError):
    """A slope requested for realization is not in the filling interval."""


class MalformedIncidence(TautfillError):
    """A sector complex references unknown sectors or breaks cusp invariants."""


class InconsistentPairing(TautfillError):
    """An arc system's endpoint data does not define a valid set of arcs."""


class CensusFormatError(TautfillError):
    """A census file line fails to parse; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number

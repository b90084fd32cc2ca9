"""Exact arithmetic on boundary slopes of a fibered 3-manifold.

A slope on a torus boundary component is a point of QP^1 = Q u {inf},
written in the canonical meridian/longitude coordinates: the longitude
(slope 0) is the fiber direction, the meridian (slope inf) is transverse to
the fibers, and <meridian, longitude> = +1.  Slopes are stored as a reduced
integer pair with nonnegative denominator; infinity is the unique pair
(1, 0).  In these coordinates the degeneracy slope of a boundary torus
always avoids the band [-2, 2), which is what `normalize_degeneracy`
enforces.

The text form used everywhere (CLI, census files) is "a/b", "a" (meaning
a/1) or "inf", reduced, with the sign on the numerator.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    DeltaOutOfRange,
    MalformedSlope,
    ObstructedMeridian,
    UnsupportedCoordinateFlip,
)

_SLOPE_RE = re.compile(r"\A(?:inf|(?:0|-?[1-9][0-9]*)(?:/[1-9][0-9]*)?)\Z")


@dataclass(frozen=True)
class Slope:
    """A point of QP^1 in canonical reduced form.

    The constructor insists on the canonical representative; use
    `reduce_slope` to normalize arbitrary integer pairs.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 0:
            raise MalformedSlope("denominator must be nonnegative; use reduce_slope")
        if self.den == 0 and self.num != 1:
            raise MalformedSlope("infinity must be stored as (1, 0)")
        if math.gcd(abs(self.num), self.den) != 1:
            raise MalformedSlope(f"({self.num}, {self.den}) is not reduced")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise MalformedSlope("infinity has no fractional value")
        return Fraction(self.num, self.den)

    def negated(self) -> "Slope":
        """The slope -s; infinity is fixed."""
        if self.is_infinite:
            return self
        return Slope(-self.num, self.den)

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Slope":
        return cls(value.numerator, value.denominator)

    @classmethod
    def from_text(cls, text: str) -> "Slope":
        """Parse the bit-exact text form ("a/b", "a" or "inf")."""
        if not _SLOPE_RE.match(text):
            raise MalformedSlope(f"bad slope literal {text!r}")
        if text == "inf":
            return INFINITY
        if "/" in text:
            a, b = text.split("/")
            slope = reduce_slope(int(a), int(b))
            if (slope.num, slope.den) != (int(a), int(b)):
                raise MalformedSlope(f"slope literal {text!r} is not reduced")
            return slope
        return cls(int(text), 1)

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Slope({self})"


INFINITY = Slope(1, 0)
ZERO = Slope(0, 1)


def reduce_slope(a: int, b: int) -> Slope:
    """Reduce an integer pair to the canonical slope representative.

    The sign moves to the numerator and the denominator becomes
    nonnegative; (a, 0) reduces to infinity.  (0, 0) is rejected.
    """
    if a == 0 and b == 0:
        raise MalformedSlope("(0, 0) does not represent a slope")
    if b == 0:
        return INFINITY
    g = math.gcd(abs(a), abs(b))
    if b < 0:
        a, b = -a, -b
    return Slope(a // g, b // g)


def geom_intersection(s: Slope, t: Slope) -> int:
    """Minimal geometric intersection number |a*d - b*c| of two slopes."""
    return abs(s.num * t.den - s.den * t.num)


def in_excluded_band(s: Slope) -> bool:
    """True when s lies in [-2, 2), the band no degeneracy slope can occupy."""
    if s.is_infinite:
        return False
    return Fraction(-2) <= s.as_fraction() < Fraction(2)


@dataclass(frozen=True)
class DegeneracyLocus:
    """The closed boundary orbits through singular points, as a pair (p; q).

    p > 0 counts fiber-direction crossings, -p/2 < q <= p/2 the twisting;
    the underlying slope is p/q and gcd(p, q) is the number of parallel
    orbit curves (the multiplicity).
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p <= 0:
            raise DeltaOutOfRange("locus requires p > 0")
        if not (-self.p < 2 * self.q <= self.p):
            raise DeltaOutOfRange(
                f"twisting {self.q} outside (-{self.p}/2, {self.p}/2]"
            )

    @property
    def slope(self) -> Slope:
        return reduce_slope(self.p, self.q)

    @property
    def multiplicity(self) -> int:
        return math.gcd(self.p, abs(self.q))

    def __str__(self) -> str:
        return f"({self.p}; {self.q})"


def normalize_degeneracy(delta: Slope, multiplicity: int = 1) -> DegeneracyLocus:
    """Build the locus (n*u; n*v) from a degeneracy slope u/v and multiplicity n.

    Rejects slopes in [-2, 2); the range invariant -p/2 < q <= p/2 then
    holds automatically.  The slope is re-signed so u > 0 (infinity is 1/0).
    """
    if multiplicity < 1:
        raise DeltaOutOfRange("multiplicity must be a positive integer")
    if in_excluded_band(delta):
        raise DeltaOutOfRange(f"degeneracy slope {delta} lies in [-2, 2)")
    u, v = delta.num, delta.den
    if u < 0:
        u, v = -u, -v
    return DegeneracyLocus(multiplicity * u, multiplicity * v)


def fdtc(delta: Slope) -> Fraction:
    """Fractional Dehn twist coefficient 1/delta; zero when delta is infinity."""
    if delta.is_infinite:
        return Fraction(0)
    if delta.num == 0:
        raise DeltaOutOfRange("slope 0 is not a valid degeneracy slope")
    return Fraction(delta.den, delta.num)


def flip_orientation(s: Slope, delta: Slope) -> Slope:
    """Coordinate change of a slope under reversing the ambient orientation.

    For delta != 2 the meridian is fixed and every rational slope negates.
    For delta = 2 the two canonical coordinate systems swap the slopes inf
    and 1; the change of basis on other slopes is not determined, so those
    inputs are rejected.
    """
    if delta == Slope(2, 1):
        if s == INFINITY:
            return Slope(1, 1)
        if s == Slope(1, 1):
            return INFINITY
        raise UnsupportedCoordinateFlip(
            f"with boundary slope 2 only inf and 1 have a known image, not {s}"
        )
    return s.negated()


class KnotType(Enum):
    """Trichotomy of the meridian of a fibered knot against the degeneracy data."""

    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_III = "III"


def classify_knot_type(m: Slope, d: DegeneracyLocus) -> KnotType:
    """Classify a meridian slope against a degeneracy locus.

    Requires multiplicity * geom_intersection(m, delta) < 2, the condition
    for the stable lamination to survive the filling; otherwise the
    configuration is impossible and `ObstructedMeridian` is raised.

    Type I: m equals the degeneracy slope.  Type II: m meets the fiber
    slope once (m = inf, or m = 1 when delta = 2).  Type III: the rest; the
    locus multiplicity is then forced to be 1.
    """
    delta = d.slope
    if geom_intersection(m, delta) * d.multiplicity >= 2:
        raise ObstructedMeridian(
            f"meridian {m} meets locus {d} at least twice; no filling to a "
            "lamination-free manifold exists"
        )
    if m == delta:
        return KnotType.TYPE_I
    if geom_intersection(m, ZERO) == 1:
        # Under the precondition this forces m = inf, or m = 1 with delta = 2.
        return KnotType.TYPE_II
    assert d.multiplicity == 1
    return KnotType.TYPE_III

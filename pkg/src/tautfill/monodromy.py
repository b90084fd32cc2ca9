"""Combinatorial input model for a co-orientation-reversing monodromy.

Each boundary torus of the mapping torus is described by a triple
(c, p, q): c is the orbit length of a chosen fiber boundary circle under
the monodromy, p the number of stable-foliation singularities on that
circle, and q the index shift of those singularities under the c-th power.
For a co-orientable monodromy p is even, and in the reversing case q and c
agree mod 2.  The triple is taken as ground truth; recovering it from a
mapping-class word is out of scope here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    DegenerateDelta,
    OddProngCount,
    ParityMismatch,
    RangeViolation,
)
from .slopes import DegeneracyLocus, Slope, in_excluded_band, reduce_slope


@dataclass(frozen=True)
class PhiTriple:
    """Validated boundary data (c, p, q) of a reversing monodromy."""

    c: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.c < 1:
            raise RangeViolation("orbit length c must be a positive integer")
        if self.p < 1:
            raise RangeViolation("singularity count p must be a positive integer")
        if self.p % 2 != 0:
            raise OddProngCount(f"p = {self.p} is odd; co-orientability needs 2 | p")
        if (self.q - self.c) % 2 != 0:
            raise ParityMismatch(f"q = {self.q} and c = {self.c} differ mod 2")
        if not (-self.p < 2 * self.q <= self.p):
            raise RangeViolation(
                f"q = {self.q} outside (-{self.p}/2, {self.p}/2]"
            )
        if in_excluded_band(reduce_slope(self.p, self.q)):
            # Unreachable given the range check, kept as a guard.
            raise DegenerateDelta(f"p/q = {self.p}/{self.q} lies in [-2, 2)")

    @property
    def delta(self) -> Slope:
        """The degeneracy slope p/q in reduced form."""
        return reduce_slope(self.p, self.q)

    @property
    def locus(self) -> DegeneracyLocus:
        return DegeneracyLocus(self.p, self.q)

    def __str__(self) -> str:
        return f"{self.c},{self.p},{self.q}"


def validate_triple(c: int, p: int, q: int) -> PhiTriple:
    """Validate (c, p, q), raising the specific violated invariant."""
    return PhiTriple(c, p, q)


def parse_triple(text: str) -> PhiTriple:
    """Parse the comma-separated text form "c,p,q"."""
    parts = text.split(",")
    if len(parts) != 3:
        raise RangeViolation(f"triple literal {text!r} must have three fields")
    try:
        c, p, q = (int(part) for part in parts)
    except ValueError as exc:
        raise RangeViolation(f"triple literal {text!r} has a non-integer field") from exc
    return PhiTriple(c, p, q)


def singularity_action(t: PhiTriple, j: int) -> int:
    """Image index of the j-th boundary singularity under the c-th power.

    Indices are 1-based and cyclic: j goes to j + q (mod p).
    """
    if not 1 <= j <= t.p:
        raise RangeViolation(f"index {j} outside 1..{t.p}")
    return (j - 1 + t.q) % t.p + 1


class Veering(Enum):
    RIGHT_VEERING = "right"
    LEFT_VEERING = "left"
    NEITHER = "neither"


def veering_class(t: PhiTriple) -> Veering:
    """Right/left veering of a boundary circle preserved by the monodromy.

    Defined only for c = 1, where the twist coefficient is 1/(p/q) = q/p and
    its sign is the sign of q; q is odd there, so NEITHER never occurs.
    """
    if t.c != 1:
        raise RangeViolation("veering is only defined when the circle is preserved")
    return Veering.RIGHT_VEERING if t.q > 0 else Veering.LEFT_VEERING


class Coorientation(Enum):
    PRESERVING = "preserving"
    REVERSING = "reversing"


def power_coorientation(n: int) -> Coorientation:
    """Co-orientation behaviour of the n-th power of a reversing monodromy."""
    if n < 1:
        raise RangeViolation("power must be a positive integer")
    return Coorientation.PRESERVING if n % 2 == 0 else Coorientation.REVERSING


@dataclass(frozen=True)
class MonodromySpec:
    """An ordered list of boundary triples with co-orientation pinned to reversing."""

    orbits: tuple[PhiTriple, ...]
    coorientation: Coorientation = field(default=Coorientation.REVERSING)

    def __post_init__(self) -> None:
        if not self.orbits:
            raise RangeViolation("a monodromy needs at least one boundary orbit")
        if self.coorientation is not Coorientation.REVERSING:
            raise RangeViolation("this model only covers reversing monodromies")
        # With a single preserved boundary circle, q is odd hence nonzero: the
        # degeneracy slope of a connected boundary is never the meridian.
        assert not any(t.c == 1 and t.q == 0 for t in self.orbits)

"""Filling intervals on the circle of slopes.

A `SlopeInterval` is a finite union of open arcs of RP^1 with rational
endpoints, stored as real intervals (endpoints rational or unbounded) plus
a separate flag for the point at infinity.  This matches how the interval
of taut-foliation filling slopes of a reversing triple (c, p, q) prints:
one of the two open arcs between p/(q+c) and p/(q-c), the one avoiding the
degeneracy slope p/q.

`ctf_interval` evaluates the six-case closed form directly; `rp1_between`
computes arcs from the circular order alone.  The two agree and the test
suite checks that equivalence exhaustively, so keep them independent.

Text grammar (bit-exact, used by the CLI and census files)::

    interval ::= term (" U " term)*
    term     ::= "(-inf, S)" | "(S, inf)" | "(S, S)" | "{inf}"

where S is the slope text form.  Arcs print in increasing order and the
"{inf}" term, when present, prints last.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import MalformedSlope, RangeViolation
from .monodromy import PhiTriple
from .slopes import INFINITY, Slope, reduce_slope

# An arc endpoint: None encodes the unbounded side (-inf as lo, +inf as hi).
Arc = tuple[Optional[Slope], Optional[Slope]]

Multislope = tuple[Slope, ...]


def _lo_key(arc: Arc) -> tuple[int, Fraction]:
    lo, _ = arc
    return (0, Fraction(0)) if lo is None else (1, lo.as_fraction())


def _check_arc(arc: Arc) -> None:
    lo, hi = arc
    for end in (lo, hi):
        if end is not None and end.is_infinite:
            raise MalformedSlope("arc endpoints must be finite; use includes_infinity")
    if lo is not None and hi is not None and lo.as_fraction() >= hi.as_fraction():
        raise MalformedSlope(f"empty or reversed arc ({lo}, {hi})")


@dataclass(frozen=True)
class SlopeInterval:
    """A finite union of disjoint open arcs, canonically sorted and merged."""

    arcs: tuple[Arc, ...]
    includes_infinity: bool = field(default=False)

    def __post_init__(self) -> None:
        for arc in self.arcs:
            _check_arc(arc)
        object.__setattr__(self, "arcs", _canonicalize(self.arcs))

    def contains(self, s: Slope) -> bool:
        if s.is_infinite:
            return self.includes_infinity
        x = s.as_fraction()
        for lo, hi in self.arcs:
            if (lo is None or lo.as_fraction() < x) and (
                hi is None or x < hi.as_fraction()
            ):
                return True
        return False

    def negated(self) -> "SlopeInterval":
        """Image under s -> -s (arc-by-arc negation, infinity fixed)."""
        arcs = tuple(
            (None if hi is None else hi.negated(), None if lo is None else lo.negated())
            for lo, hi in self.arcs
        )
        return SlopeInterval(arcs, self.includes_infinity)

    def __str__(self) -> str:
        return format_interval(self)


def _canonicalize(arcs: Sequence[Arc]) -> tuple[Arc, ...]:
    """Sort arcs and merge overlaps; touching open arcs stay separate."""
    ordered = sorted(arcs, key=_lo_key)
    merged: list[Arc] = []
    for arc in ordered:
        if merged:
            lo_p, hi_p = merged[-1]
            lo, hi = arc
            prev_hi = None if hi_p is None else hi_p.as_fraction()
            cur_lo = None if lo is None else lo.as_fraction()
            overlaps = (
                prev_hi is None
                or (cur_lo is not None and cur_lo < prev_hi)
                or (cur_lo is None)
            )
            if overlaps:
                if prev_hi is None or hi is None:
                    new_hi = None
                else:
                    new_hi = hi_p if prev_hi >= hi.as_fraction() else hi
                merged[-1] = (lo_p, new_hi)
                continue
        merged.append(arc)
    return tuple(merged)


def contains(interval: SlopeInterval, s: Slope) -> bool:
    """Exact membership of a slope in an interval, infinity included."""
    return interval.contains(s)


def multislope_member(intervals: Sequence[SlopeInterval], slopes: Multislope) -> bool:
    """Coordinatewise membership of a multislope in a list of intervals."""
    if len(intervals) != len(slopes):
        raise RangeViolation(
            f"multislope has {len(slopes)} entries for {len(intervals)} intervals"
        )
    return all(j.contains(s) for j, s in zip(intervals, slopes))


def rp1_arc(start: Slope, end: Slope) -> SlopeInterval:
    """The open arc from `start` to `end`, travelling in increasing slopes.

    Travelling upward through the finite slopes and wrapping through
    infinity back to the bottom.  The endpoints themselves are excluded.
    """
    if start == end:
        raise RangeViolation("an arc needs distinct endpoints")
    if start.is_infinite:
        return SlopeInterval(((None, end),))
    if end.is_infinite:
        return SlopeInterval(((start, None),))
    if start.as_fraction() < end.as_fraction():
        return SlopeInterval(((start, end),))
    return SlopeInterval(((None, end), (start, None)), includes_infinity=True)


def rp1_between(e1: Slope, e2: Slope, excluded: Slope) -> SlopeInterval:
    """The open arc of RP^1 bounded by e1, e2 that avoids `excluded`."""
    if len({e1, e2, excluded}) != 3:
        raise RangeViolation("rp1_between needs three pairwise distinct slopes")
    arc = rp1_arc(e1, e2)
    if arc.contains(excluded):
        arc = rp1_arc(e2, e1)
        assert not arc.contains(excluded)
    return arc


def ctf_interval(t: PhiTriple) -> SlopeInterval:
    """Filling slopes along which the mapping torus keeps a taut foliation.

    Six cases on the position of q against +-c; the endpoints p/(q+c) and
    p/(q-c) are always excluded, as is the degeneracy slope p/q.
    """
    c, p, q = t.c, t.p, t.q
    if q > c:
        return SlopeInterval(
            ((None, reduce_slope(p, q + c)), (reduce_slope(p, q - c), None)),
            includes_infinity=True,
        )
    if q == c:
        return SlopeInterval(((None, reduce_slope(p, 2 * q)),))
    if c > q >= 0:
        return SlopeInterval(((reduce_slope(-p, c - q), reduce_slope(p, q + c)),))
    if -c < q < 0:
        return SlopeInterval(((reduce_slope(-p, -q + c), reduce_slope(p, c + q)),))
    if q == -c:
        return SlopeInterval(((reduce_slope(-p, -2 * q), None),))
    return SlopeInterval(
        ((None, reduce_slope(-p, -q - c)), (reduce_slope(-p, -q + c), None)),
        includes_infinity=True,
    )


def interval_endpoints(t: PhiTriple) -> tuple[Slope, Slope]:
    """The pair p/(q+c), p/(q-c) bounding the filling interval."""
    return reduce_slope(t.p, t.q + t.c), reduce_slope(t.p, t.q - t.c)


# -- text form ---------------------------------------------------------------

_TERM_RE = re.compile(
    r"\A(?:\{inf\}|\(\s*(?P<lo>-inf|[^\s,]+)\s*,\s*(?P<hi>inf|[^\s,)]+)\s*\))\Z"
)


def format_interval(interval: SlopeInterval) -> str:
    """Emit the canonical text form, e.g. "(-inf, -4) U (-2, inf) U {inf}"."""
    terms = []
    for lo, hi in interval.arcs:
        lo_text = "-inf" if lo is None else str(lo)
        hi_text = "inf" if hi is None else str(hi)
        terms.append(f"({lo_text}, {hi_text})")
    if interval.includes_infinity:
        terms.append("{inf}")
    if not terms:
        raise RangeViolation("the empty interval has no text form")
    return " U ".join(terms)


def parse_interval(text: str) -> SlopeInterval:
    """Parse the text grammar back into a canonical interval."""
    arcs: list[Arc] = []
    includes_infinity = False
    for term in text.split(" U "):
        match = _TERM_RE.match(term)
        if match is None:
            raise MalformedSlope(f"bad interval term {term!r}")
        if term == "{inf}":
            includes_infinity = True
            continue
        lo_text, hi_text = match.group("lo"), match.group("hi")
        lo = None if lo_text == "-inf" else Slope.from_text(lo_text)
        hi = None if hi_text == "inf" else Slope.from_text(hi_text)
        arcs.append((lo, hi))
    return SlopeInterval(tuple(arcs), includes_infinity)

"""The boundary train track of a reversing triple, and its measures.

Geometry being modelled.  A boundary torus T of the mapping torus meets the
fiber surface in c parallel circles.  Each circle carries p marked singular
points splitting it into p stable segments of alternating sign, and the
product disks attached along the spanning arcs leave two families of
vertical edges in each gap between consecutive circles: one vertical edge
per stable segment.  The result is a train track with 2pc switches and
3pc edges (2pc horizontal, pc vertical).

Conventions (fixed once, everything downstream depends on them):

* Segments are indexed 0..p-1 along the positive circle orientation;
  segment j is negative for even j, positive for odd j.  Positions are
  measured in thirds of a segment, so a circle has circumference 3p.
* Each segment contains two switches, the upper endpoint U (entry of the
  vertical edge from the previous circle, at position 3j+1) before the
  lower endpoint L (exit of the vertical edge to the next circle, at
  3j+2).
* The vertical edge leaving segment j of circle k lands in segment
  j + s_k of circle k+1, with per-gap shifts s_0 = ... = s_{c-2} = 1 and
  s_{c-1} = q - (c - 1); each s_k is odd, so segment signs flip across a
  gap, and the shifts sum to q exactly.  A vertical edge out of a negative
  segment is positive (its cusps point against / along the circle
  orientation at its lower / upper endpoint), out of a positive segment
  it is negative, with the cusp directions reversed.
* Every edge has a canonical direction: horizontal edges run along the
  positive orientation, vertical edges run upward.  A vertical edge in gap
  k displaces 3*s_k - 1 thirds horizontally; inner edges (U to L) displace
  1, crossing edges (L over the next marked point to U) displace 2.

Homology.  For a closed train path, or more generally a weight vector
satisfying the cusp relations, the pairing with the fiber slope is the
signed flux through any one gap, and the pairing with the meridian is the
total signed horizontal displacement divided by 3p.  This reproduces the
carried curves of slopes p/(q+c) and p/(q-c), and it is how measures are
assigned a slope.

Realization.  Slopes interior to the filling interval are realized by
strictly positive measures of the form gamma(1) + t * R, where R is the
sum over all edges of a slope-zero loop through that edge (one full unit
of horizontal winding each, net vertical flux zero), and t > 0 solves a
one-parameter slope equation; the downward-oriented family nu(1) + t * R'
covers the rest of the interval.  Endpoint slopes are carried but admit no
strictly positive measure.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import RangeViolation, SlopeOutsideInterval, SwitchViolation
from .intervals import SlopeInterval, ctf_interval
from .monodromy import PhiTriple
from .slopes import Slope, reduce_slope

Measure = Mapping[int, Fraction]

INNER = "inner"
CROSSING = "crossing"
VERTICAL = "vertical"


@dataclass(frozen=True)
class Edge:
    index: int
    kind: str
    circle: int  # the carrying circle; for vertical edges, the gap below
    seg: int
    tail: int  # switch at the start of the canonical direction
    head: int
    disp: int  # horizontal displacement in thirds, canonical direction
    vkind: str | None = None  # "pos" / "neg" for vertical edges


@dataclass(frozen=True)
class Switch:
    index: int
    circle: int
    seg: int
    role: str  # "U" | "L"
    smooth: int  # edge index of the smooth branch
    cusped: tuple[int, int]  # the two branches on the cusp side


class TrackMode(Enum):
    """Coherent orientations of the track.

    UP: circles positively oriented, positive vertical edges upward,
    negative ones downward.  DOWN reverses all three.
    """

    UP = "up"
    DOWN = "down"

    def flipped(self) -> "TrackMode":
        return TrackMode.DOWN if self is TrackMode.UP else TrackMode.UP


@dataclass(frozen=True)
class TrainTrack:
    triple: PhiTriple
    shifts: tuple[int, ...]
    switches: tuple[Switch, ...]
    edges: tuple[Edge, ...]

    @property
    def c(self) -> int:
        return self.triple.c

    @property
    def p(self) -> int:
        return self.triple.p

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    # Deterministic id layout: per circle, interleaved inner/crossing pairs,
    # then all vertical edges; switches U before L per segment.
    def switch_id(self, k: int, j: int, role: str) -> int:
        return (k * self.p + j) * 2 + (0 if role == "U" else 1)

    def inner_id(self, k: int, j: int) -> int:
        return (k * self.p + j) * 2

    def crossing_id(self, k: int, j: int) -> int:
        return (k * self.p + j) * 2 + 1

    def vertical_id(self, k: int, j: int) -> int:
        return 2 * self.p * self.triple.c + k * self.p + j

    def direction(self, edge: Edge, mode: TrackMode) -> int:
        """Traversal sign of an edge relative to its canonical direction."""
        if edge.kind == VERTICAL and edge.vkind == "neg":
            sign = -1
        else:
            sign = 1
        return sign if mode is TrackMode.UP else -sign

    def check_measure(self, m: Measure) -> None:
        """Cusp relation m(x) + m(y) = m(z) at every switch, weights >= 0."""
        for e in self.edges:
            if m.get(e.index, 0) < 0:
                raise SwitchViolation(f"negative weight on edge {e.index}")
        for sw in self.switches:
            x, y = sw.cusped
            if m.get(x, 0) + m.get(y, 0) != m.get(sw.smooth, 0):
                raise SwitchViolation(
                    f"cusp relation fails at switch {sw.index} "
                    f"(circle {sw.circle}, segment {sw.seg}, {sw.role})"
                )


@dataclass(frozen=True)
class OrientedTrack:
    """A track together with one of its two coherent orientations."""

    track: TrainTrack
    mode: TrackMode

    def direction(self, edge_index: int) -> int:
        return self.track.direction(self.track.edges[edge_index], self.mode)

    def reversed(self) -> "OrientedTrack":
        return OrientedTrack(self.track, self.mode.flipped())


@dataclass(frozen=True)
class CycleClass:
    """A boundary homology class: a = <., fiber slope>, b = <meridian, .>."""

    a: Fraction
    b: Fraction

    @property
    def slope(self) -> Slope:
        if self.a == 0 and self.b == 0:
            raise RangeViolation("the zero class has no slope")
        if self.b == 0:
            return reduce_slope(1, 0)
        value = Fraction(self.a, self.b)
        return reduce_slope(value.numerator, value.denominator)


@lru_cache(maxsize=None)
def build_track(triple: PhiTriple) -> TrainTrack:
    """Assemble the boundary train track of a validated reversing triple."""
    c, p, q = triple.c, triple.p, triple.q
    shifts = tuple([1] * (c - 1) + [q - (c - 1)])
    track = TrainTrack(triple, shifts, (), ())  # id helpers only

    edges: list[Edge] = []
    for k in range(c):
        for j in range(p):
            edges.append(
                Edge(
                    index=track.inner_id(k, j),
                    kind=INNER,
                    circle=k,
                    seg=j,
                    tail=track.switch_id(k, j, "U"),
                    head=track.switch_id(k, j, "L"),
                    disp=1,
                )
            )
            edges.append(
                Edge(
                    index=track.crossing_id(k, j),
                    kind=CROSSING,
                    circle=k,
                    seg=j,
                    tail=track.switch_id(k, j, "L"),
                    head=track.switch_id(k, (j + 1) % p, "U"),
                    disp=2,
                )
            )
    for k in range(c):
        for j in range(p):
            edges.append(
                Edge(
                    index=track.vertical_id(k, j),
                    kind=VERTICAL,
                    circle=k,
                    seg=j,
                    tail=track.switch_id(k, j, "L"),
                    head=track.switch_id((k + 1) % c, (j + shifts[k]) % p, "U"),
                    disp=3 * shifts[k] - 1,
                    vkind="pos" if j % 2 == 0 else "neg",
                )
            )
    edges.sort(key=lambda e: e.index)

    switches: list[Switch] = []
    for k in range(c):
        for j in range(p):
            k_prev = (k - 1) % c
            j_prev = (j - shifts[k_prev]) % p
            incoming = track.vertical_id(k_prev, j_prev)
            before = track.crossing_id(k, (j - 1) % p)
            after = track.inner_id(k, j)
            if j % 2 == 1:
                # Upper endpoint of a positive vertical edge: cusp along the
                # positive orientation, smooth continuation ahead.
                smooth, cusped = after, (before, incoming)
            else:
                # Upper endpoint of a negative vertical edge: cusp against.
                smooth, cusped = before, (after, incoming)
            switches.append(
                Switch(track.switch_id(k, j, "U"), k, j, "U", smooth, cusped)
            )
            outgoing = track.vertical_id(k, j)
            before = track.inner_id(k, j)
            after = track.crossing_id(k, j)
            if j % 2 == 0:
                # Lower endpoint of a positive vertical edge: cusp against.
                smooth, cusped = before, (after, outgoing)
            else:
                smooth, cusped = after, (before, outgoing)
            switches.append(
                Switch(track.switch_id(k, j, "L"), k, j, "L", smooth, cusped)
            )
    switches.sort(key=lambda s: s.index)
    return TrainTrack(triple, shifts, tuple(switches), tuple(edges))


def orient_track(track: TrainTrack, mode: TrackMode) -> OrientedTrack:
    return OrientedTrack(track, mode)


# -- walks and their classes --------------------------------------------------

Walk = list[tuple[int, int]]  # (edge index, sign relative to canonical)


def gamma_walk(track: TrainTrack) -> Walk:
    """The canonical carried curve along positive vertical edges.

    Runs along the positive circle orientation, diving up the first
    positive vertical edge met after each arrival.
    """
    p, shifts = track.p, track.shifts
    walk: Walk = []
    k, j = 0, 0
    while True:
        walk.append((track.vertical_id(k, j), 1))
        a = (j + shifts[k]) % p
        k = (k + 1) % track.c
        walk.append((track.inner_id(k, a), 1))
        walk.append((track.crossing_id(k, a), 1))
        j = (a + 1) % p
        walk.append((track.inner_id(k, j), 1))
        if (k, j) == (0, 0):
            return walk


def nu_walk(track: TrainTrack) -> Walk:
    """The canonical carried curve along negative vertical edges.

    Runs against the circle orientation, climbing each negative vertical
    edge from its lower endpoint.
    """
    p, shifts = track.p, track.shifts
    walk: Walk = []
    k, j = 0, p - 1
    while True:
        walk.append((track.vertical_id(k, j), 1))
        a = (j + shifts[k]) % p
        k = (k + 1) % track.c
        j = (a - 1) % p
        walk.append((track.crossing_id(k, j), -1))
        if (k, j) == (0, track.p - 1):
            return walk


def class_of_walk(track: TrainTrack, walk: Walk) -> CycleClass:
    """Orbit-counting homology class: gap-0 flux and total winding."""
    flux = 0
    disp = 0
    for index, sign in walk:
        edge = track.edges[index]
        disp += sign * edge.disp
        if edge.kind == VERTICAL and edge.circle == 0:
            flux += sign
    total = Fraction(disp, 3 * track.p)
    assert total.denominator == 1, "closed walks wind an integer number of times"
    return CycleClass(Fraction(flux), total)


def walk_measure(walk: Walk) -> dict[int, Fraction]:
    counts = Counter(index for index, _ in walk)
    return {index: Fraction(count) for index, count in counts.items()}


def canonical_gamma(track: TrainTrack) -> CycleClass:
    return class_of_walk(track, gamma_walk(track))


def canonical_nu(track: TrainTrack) -> CycleClass:
    return class_of_walk(track, nu_walk(track))


def measure_class(track: TrainTrack, m: Measure, mode: TrackMode) -> CycleClass:
    """Homology class of the lamination carried with weights m.

    The two modes give opposite classes; the slope is mode-independent.
    """
    track.check_measure(m)
    a = Fraction(0)
    disp = Fraction(0)
    for edge in track.edges:
        weight = m.get(edge.index, 0)
        if not weight:
            continue
        sign = track.direction(edge, mode)
        disp += sign * edge.disp * weight
        if edge.kind == VERTICAL and edge.circle == 0:
            a += sign * weight
    return CycleClass(a, disp / (3 * track.p))


# -- slope-zero loops ---------------------------------------------------------


def _forward_l_run(track: TrainTrack, k: int, a: int, b: int) -> Walk:
    """Edges from L_(k,a) to L_(k,b) along the positive orientation."""
    out: Walk = []
    t = a
    while True:
        out.append((track.crossing_id(k, t), 1))
        t = (t + 1) % track.p
        out.append((track.inner_id(k, t), 1))
        if t == b:
            return out


def _backward_l_run(track: TrainTrack, k: int, a: int, b: int) -> Walk:
    """Edges from L_(k,a) to L_(k,b) against the orientation."""
    out: Walk = []
    t = a
    while True:
        out.append((track.inner_id(k, t), -1))
        t = (t - 1) % track.p
        out.append((track.crossing_id(k, t), -1))
        if t == b:
            return out


def _backward_u_run(track: TrainTrack, k: int, a: int, b: int) -> Walk:
    """Edges from U_(k,a) to U_(k,b) against the orientation."""
    out: Walk = []
    t = a
    while True:
        t = (t - 1) % track.p
        out.append((track.crossing_id(k, t), -1))
        out.append((track.inner_id(k, t), -1))
        if t == b:
            return out


def slope_zero_loop(track: TrainTrack, edge_index: int, mode: TrackMode) -> Walk:
    """A coherent closed walk through the edge with slope 0 and winding +-1.

    Net vertical flux is zero and the horizontal winding is +1 in UP mode
    (-1 in DOWN mode), so the loop's class is that of the fiber slope.  A
    loop through a vertical edge climbs a gap once and descends it through
    the adjacent vertical edge of the other kind; the walk may repeat a
    crossing edge, which simply gives that edge weight two.
    """
    p, c = track.p, track.c
    edge = track.edges[edge_index]
    if edge.kind != VERTICAL:
        k = edge.circle
        sign = 1 if mode is TrackMode.UP else -1
        return [
            (eid, sign)
            for j in range(p)
            for eid in (track.inner_id(k, j), track.crossing_id(k, j))
        ]
    k, j, s = edge.circle, edge.seg, track.shifts[edge.circle]
    k1 = (k + 1) % c
    if mode is TrackMode.UP:
        if edge.vkind == "pos":
            a = (j + s) % p
            return (
                [(edge_index, 1)]
                + [(track.inner_id(k1, a), 1), (track.crossing_id(k1, a), 1)]
                + [(track.vertical_id(k, (j + 1) % p), -1)]
                + _forward_l_run(track, k, (j + 1) % p, j)
            )
        a0 = (j - 1 + s) % p
        return (
            [(track.vertical_id(k, (j - 1) % p), 1)]
            + [(track.inner_id(k1, a0), 1), (track.crossing_id(k1, a0), 1)]
            + [(edge_index, -1)]
            + _forward_l_run(track, k, j, (j - 1) % p)
        )
    if edge.vkind == "neg":
        a = (j + s) % p
        return (
            [(edge_index, 1)]
            + [(track.crossing_id(k1, (a - 1) % p), -1)]
            + [(track.vertical_id(k, (j - 1) % p), -1)]
            + _backward_l_run(track, (k), (j - 1) % p, j)
        )
    return (
        [(edge_index, -1)]
        + [(track.inner_id(k, j), -1), (track.crossing_id(k, (j - 1) % p), -1)]
        + [(track.vertical_id(k, (j - 1) % p), 1)]
        + _backward_u_run(track, k1, (j - 1 + s) % p, (j + s) % p)
    )


def walk_is_coherent(track: TrainTrack, walk: Walk, mode: TrackMode) -> bool:
    """Closed, connected, orientation-coherent and cusp-legal."""
    switch_by_id = {sw.index: sw for sw in track.switches}

    def endpoints(index: int, sign: int) -> tuple[int, int]:
        edge = track.edges[index]
        return (edge.tail, edge.head) if sign == 1 else (edge.head, edge.tail)

    for (index, sign) in walk:
        if sign != track.direction(track.edges[index], mode):
            return False
    for (cur, nxt) in zip(walk, walk[1:] + walk[:1]):
        _, at = endpoints(*cur)
        start, _ = endpoints(*nxt)
        if at != start:
            return False
        cusped = set(switch_by_id[at].cusped)
        if cur[0] in cusped and nxt[0] in cusped:
            return False
    return True


# -- realization --------------------------------------------------------------


@dataclass(frozen=True)
class _Kit:
    track: TrainTrack
    gamma_measure: dict[int, Fraction]
    nu_measure: dict[int, Fraction]
    gamma_class: CycleClass
    nu_class: CycleClass
    r_up: dict[int, Fraction]
    r_down: dict[int, Fraction]


def _sum_measures(measures: Iterable[Mapping[int, int]]) -> dict[int, Fraction]:
    total: Counter = Counter()
    for m in measures:
        total.update(m)
    return {index: Fraction(count) for index, count in total.items()}


@lru_cache(maxsize=256)
def _realization_kit(triple: PhiTriple) -> _Kit:
    track = build_track(triple)
    gw, nw = gamma_walk(track), nu_walk(track)
    r_up = _sum_measures(
        Counter(i for i, _ in slope_zero_loop(track, e.index, TrackMode.UP))
        for e in track.edges
    )
    r_down = _sum_measures(
        Counter(i for i, _ in slope_zero_loop(track, e.index, TrackMode.DOWN))
        for e in track.edges
    )
    return _Kit(
        track,
        walk_measure(gw),
        walk_measure(nw),
        class_of_walk(track, gw),
        class_of_walk(track, nw),
        r_up,
        r_down,
    )


def _combine(base: Mapping[int, Fraction], t: Fraction, bulk: Mapping[int, Fraction],
             n_edges: int) -> dict[int, Fraction]:
    return {
        index: base.get(index, Fraction(0)) + t * bulk.get(index, Fraction(0))
        for index in range(n_edges)
    }


def realize_slope(track: TrainTrack, x: Slope) -> dict[int, Fraction]:
    """A strictly positive measure whose carried lamination has slope x.

    Only slopes interior to the filling interval are realizable; endpoints
    and everything beyond raise `SlopeOutsideInterval`.
    """
    interval = ctf_interval(track.triple)
    if not interval.contains(x):
        raise SlopeOutsideInterval(
            f"slope {x} is not in the filling interval {interval}"
        )
    kit = _realization_kit(track.triple)
    n = track.n_edges
    if x.num == 0:
        return dict(kit.r_up)
    v, u = kit.gamma_class.a, kit.gamma_class.b
    if x.is_infinite:
        t = Fraction(-u, n)
    else:
        t = Fraction(v * x.den - u * x.num, x.num * n)
    if t > 0:
        m = _combine(kit.gamma_measure, t, kit.r_up, n)
    else:
        s, r = kit.nu_class.a, kit.nu_class.b
        if x.is_infinite:
            t = Fraction(r, n)
        else:
            t = Fraction(x.num * r - s * x.den, x.num * n)
        if t <= 0:
            raise SlopeOutsideInterval(f"slope {x} is carried by neither family")
        m = _combine(kit.nu_measure, t, kit.r_down, n)
    assert measure_class(track, m, TrackMode.UP).slope == x
    return m


# -- serialization ------------------------------------------------------------


def track_to_text(track: TrainTrack) -> str:
    """Structured text form of the track (switch and edge tables)."""
    t = track.triple
    lines = [
        f"track c={t.c} p={t.p} q={t.q}",
        "shifts " + " ".join(str(s) for s in track.shifts),
        f"switches {len(track.switches)}",
    ]
    for sw in track.switches:
        lines.append(
            f"switch {sw.index} circle={sw.circle} seg={sw.seg} role={sw.role} "
            f"smooth={sw.smooth} cusped={sw.cusped[0]},{sw.cusped[1]}"
        )
    lines.append(f"edges {len(track.edges)}")
    for e in track.edges:
        extra = f" vkind={e.vkind}" if e.vkind else ""
        lines.append(
            f"edge {e.index} {e.kind} circle={e.circle} seg={e.seg} "
            f"tail={e.tail} head={e.head} disp={e.disp}{extra}"
        )
    return "\n".join(lines)


def measure_to_text(track: TrainTrack, m: Measure) -> str:
    lines = [f"measure edges={track.n_edges}"]
    for index in range(track.n_edges):
        lines.append(f"weight {index} {Fraction(m.get(index, 0))}")
    return "\n".join(lines)

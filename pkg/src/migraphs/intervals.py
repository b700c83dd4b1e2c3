"""Exact-arithmetic interval geometry for multiple-interval families.

All intervals are OPEN and all endpoints are exact rationals, so abutting
intervals are disjoint and no adjacency can appear or vanish through rounding.
Members of a family may carry fewer than t parts; a missing part stands for an
implicit far-away interval disjoint from everything else.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidFamily, LabelMismatch
from .graphs import Graph

Rational = Fraction

T_INTERVAL = "t-interval"
T_TRACK = "t-track"

#: Horizontal extent reserved by one staircase gadget (both variants fit).
STAIRCASE_WIDTH = Fraction(4)


def rat(num, den=1) -> Fraction:
    return Fraction(num, den)


@dataclass(frozen=True, order=True)
class Interval:
    """Open interval (lo, hi) on a numbered track (track 0 = single line)."""

    track: int
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.track < 0:
            raise ValueError("track must be non-negative")
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got ({self.lo}, {self.hi})")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def shifted(self, delta) -> "Interval":
        return Interval(self.track, self.lo + delta, self.hi + delta)


def intersects(a: Interval, b: Interval) -> bool:
    """Open-interval intersection; cross-track intervals never intersect."""
    return a.track == b.track and max(a.lo, b.lo) < min(a.hi, b.hi)


@dataclass(frozen=True)
class MultiInterval:
    label: str
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))


@dataclass(frozen=True)
class IntervalFamily:
    """A family of t-intervals (one line) or t-track intervals (t tracks)."""

    kind: str
    t: int
    members: tuple
    unit: bool = False
    balanced: bool = False
    unit_length: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if self.unit_length is not None:
            object.__setattr__(self, "unit_length", Fraction(self.unit_length))

    def labels(self) -> tuple:
        return tuple(m.label for m in self.members)

    def member(self, label: str) -> MultiInterval:
        for m in self.members:
            if m.label == label:
                return m
        raise KeyError(label)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    def add(self, code: str, label: str, message: str):
        self.violations.append((code, label, message))

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_family(f: IntervalFamily) -> ValidationReport:
    """Report every violated constraint (kind, disjointness, unit, balanced)."""
    report = ValidationReport()
    if f.kind not in (T_INTERVAL, T_TRACK):
        report.add("kind", "-", f"unknown family kind {f.kind!r}")
        return report
    if f.t < 1:
        report.add("kind", "-", f"t must be positive, got {f.t}")
    seen = set()
    for m in f.members:
        if m.label in seen:
            report.add("label", m.label, "duplicate member label")
        seen.add(m.label)
        if len(m.parts) > f.t:
            report.add("kind", m.label, f"{len(m.parts)} parts exceed t={f.t}")
        if f.kind == T_TRACK:
            tracks = [p.track for p in m.parts]
            if len(set(tracks)) != len(tracks):
                report.add("kind", m.label, "two parts share one track")
            for p in m.parts:
                if not (1 <= p.track <= f.t):
                    report.add("track", m.label,
                               f"track {p.track} outside 1..{f.t}")
        else:
            for p in m.parts:
                if p.track != 0:
                    report.add("track", m.label,
                               "t-interval members live on track 0")
            parts = sorted(m.parts, key=lambda p: (p.lo, p.hi))
            for a, b in zip(parts, parts[1:]):
                if a.hi > b.lo:  # open intervals: touching endpoints are fine
                    report.add("disjoint", m.label,
                               f"parts ({a.lo},{a.hi}) and ({b.lo},{b.hi}) overlap")
        if f.unit:
            if f.unit_length is None:
                report.add("unit", m.label, "unit flag set without unit_length")
            else:
                for p in m.parts:
                    if p.length != f.unit_length:
                        report.add("unit", m.label,
                                   f"part length {p.length} != {f.unit_length}")
        if f.balanced and m.parts:
            lengths = {p.length for p in m.parts}
            if len(lengths) > 1:
                report.add("balanced", m.label,
                           f"member parts have lengths {sorted(lengths)}")
    return report


def build_intersection_graph(f: IntervalFamily) -> Graph:
    """One vertex per member; edge iff some part of one meets a part of the other."""
    report = validate_family(f)
    if not report.ok:
        raise InvalidFamily(report)
    n = len(f.members)
    edges = set()
    for a in range(n):
        for b in range(a + 1, n):
            if any(intersects(p, q)
                   for p in f.members[a].parts for q in f.members[b].parts):
                edges.add((a, b))
    return Graph(n, frozenset(edges), f.labels())


def layout_matches(f: IntervalFamily, expected: Graph) -> bool:
    """True iff the realized intersection graph has exactly the expected edges."""
    realized = build_intersection_graph(f)
    if realized.labels != expected.labels:
        raise LabelMismatch(
            f"family labels {realized.labels[:4]}... do not match expected graph")
    return realized.edges == expected.edges


# -- staircase gadget -------------------------------------------------

def _staircase_intervals(rows: int, same_row: str, anchor, track: int):
    """Unit intervals in two slanted columns of `rows` rows.

    Each column is pairwise-intersecting.  Left-column row r meets
    right-column row s iff s <= r ("include") or s < r ("exclude").
    Everything fits inside [anchor, anchor + STAIRCASE_WIDTH).
    """
    if rows < 1:
        raise ValueError("rows must be >= 1")
    if same_row not in ("include", "exclude"):
        raise ValueError(f"unknown staircase variant {same_row!r}")
    anchor = Fraction(anchor)
    delta = Fraction(1, rows)
    shift = -delta / 2 if same_row == "include" else delta / 2
    left = [Interval(track, anchor + r * delta, anchor + r * delta + 1)
            for r in range(1, rows + 1)]
    right = [Interval(track, anchor + s * delta + 1 + shift,
                      anchor + s * delta + 2 + shift)
             for s in range(1, rows + 1)]
    return left, right


def staircase(rows: int, same_row: str, anchor, track: int = 0):
    """Left/right column interval lists of the staircase gadget."""
    return _staircase_intervals(rows, same_row, anchor, track)


def staircase_right_anchor(rows: int, anchor, track: int = 0) -> Interval:
    """Unit interval meeting every right-column interval and no left-column one.

    Only valid for the "include" variant.
    """
    anchor = Fraction(anchor)
    return Interval(track, anchor + 2, anchor + 3)


def staircase_left_anchor(rows: int, anchor, track: int = 0) -> Interval:
    """Unit interval meeting every left-column interval and no right-column one.

    Only valid for the "exclude" variant.
    """
    anchor = Fraction(anchor)
    delta = Fraction(1, rows)
    return Interval(track, anchor + delta / 2, anchor + delta / 2 + 1)


# -- odd-cycle complement families ------------------------------------

def cycle_complement_starts(n: int):
    """Integer start positions of the line representation of one cycle block.

    Members a_1..a_n get one start each, members b_1..b_{3n+1} get two; every
    interval spans 2n units from its start.  Two members intersect iff some
    pair of starts differs by less than 2n.
    """
    starts = {}
    for j in range(1, 3 * n + 2):
        starts[f"b{j}"] = (j - 1, 4 * n + j)
    for i in range(1, n + 1):
        starts[f"a{i}"] = (3 * n + i,)
    return starts


def cycle_complement_rule_adjacent(n: int, starts_x, starts_y) -> bool:
    return any(abs(sx - sy) < 2 * n for sx in starts_x for sy in starts_y)


def cycle_complement_unit2interval(n: int) -> IntervalFamily:
    """Unit 2-interval family whose intersection graph is the complement of an
    odd cycle on 4n+1 vertices (labels a_1..a_n, b_1..b_{3n+1})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    length = 2 * n
    starts = cycle_complement_starts(n)
    members = []
    for i in range(1, n + 1):
        (s,) = starts[f"a{i}"]
        members.append(MultiInterval(f"a{i}", (Interval(0, s, s + length),)))
    for j in range(1, 3 * n + 2):
        s1, s2 = starts[f"b{j}"]
        members.append(MultiInterval(f"b{j}", (Interval(0, s1, s1 + length),
                                               Interval(0, s2, s2 + length))))
    return IntervalFamily(kind=T_INTERVAL, t=2, members=tuple(members),
                          unit=True, unit_length=Fraction(length))

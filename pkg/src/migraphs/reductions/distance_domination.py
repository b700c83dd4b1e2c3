"""Reductions: colorful red-blue dominating set -> d-distance dominating set.

Two targets.  The unit 2-track branch handles every d >= 2: each color class
hangs a chain of d dummies off its shared selector interval, and each blue
vertex hangs a chain of d-2 dummies.  The co-3-interval branch handles d = 2:
the question is posed on the complement of a 3-interval family built from
covering runs over contiguous slot blocks.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import BadDistance, EmptyColorClass
from ..graphs import Graph, RBInstance
from ..intervals import Interval, IntervalFamily, MultiInterval, T_INTERVAL, T_TRACK
from .bundle import ReductionBundle, make_bundle, rb_digest

NAME_UNIT2TRACK = "dist_domset_unit2track"
NAME_CO3INTERVAL = "dist_domset_co3interval"

_STEP = Fraction(2, 3)  # chain offset: consecutive unit intervals meet, others do not


class _Lanes:
    """Left-to-right window allocator, one cursor per track, gap >= 1."""

    def __init__(self):
        self.cursor = {}

    def window(self, track, width) -> Fraction:
        start = self.cursor.get(track, Fraction(0))
        self.cursor[track] = start + Fraction(width) + 1
        return start


def _unit(track, lo) -> Interval:
    return Interval(track, lo, lo + 1)


def _labels_unit2track(rb: RBInstance, d: int):
    labels = [f"V({r + 1})" for r in range(rb.n_red)]
    labels += [f"B({t + 1})" for t in range(rb.n_blue)]
    labels += [f"E({e + 1})" for e in range(len(_sorted_edges(rb)))]
    for i in range(1, rb.k + 1):
        labels += [f"DUM(COLOR({i}),{s})" for s in range(1, d + 1)]
    for t in range(rb.n_blue):
        labels += [f"DUM(B({t + 1}),{s})" for s in range(1, d - 1)]
    return labels


def _sorted_edges(rb: RBInstance):
    return sorted(rb.edges)


def expected_unit2track_adjacency(rb: RBInstance, d: int) -> Graph:
    labels = _labels_unit2track(rb, d)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()

    def join(a, b):
        ia, ib = index[a], index[b]
        edges.add((ia, ib) if ia < ib else (ib, ia))

    es = _sorted_edges(rb)
    for a in range(rb.n_red):
        for b in range(a + 1, rb.n_red):
            if rb.colors[a] == rb.colors[b]:
                join(f"V({a + 1})", f"V({b + 1})")
    for e, (r, t) in enumerate(es):
        join(f"E({e + 1})", f"V({r + 1})")
        join(f"E({e + 1})", f"B({t + 1})")
        for e2 in range(e + 1, len(es)):
            r2, t2 = es[e2]
            if r2 == r or t2 == t:
                join(f"E({e + 1})", f"E({e2 + 1})")
    for i in range(1, rb.k + 1):
        for r in rb.reds_of_color(i):
            join(f"V({r + 1})", f"DUM(COLOR({i}),1)")
        for s in range(1, d):
            join(f"DUM(COLOR({i}),{s})", f"DUM(COLOR({i}),{s + 1})")
    for t in range(rb.n_blue):
        if d > 2:
            join(f"B({t + 1})", f"DUM(B({t + 1}),1)")
        for s in range(1, d - 2):
            join(f"DUM(B({t + 1}),{s})", f"DUM(B({t + 1}),{s + 1})")
    return Graph(len(labels), frozenset(edges), tuple(labels))


def reduce_dist_domset_unit2track(rb: RBInstance, d: int) -> ReductionBundle:
    if d < 2:
        raise BadDistance(f"d must be >= 2, got {d}")
    lanes = _Lanes()
    es = _sorted_edges(rb)
    parts = {lab: [] for lab in _labels_unit2track(rb, d)}

    # color gadgets: shared selector x_i on track 1 plus a chain of d dummies;
    # one track-2 slot per red vertex
    for i in range(1, rb.k + 1):
        reds = rb.reds_of_color(i)
        if not reds:
            raise EmptyColorClass(f"red color class {i} is empty")
        w1 = lanes.window(1, _STEP * d + 1)
        x_i = _unit(1, w1)
        for r in reds:
            parts[f"V({r + 1})"].append(x_i)
        for s in range(1, d + 1):
            parts[f"DUM(COLOR({i}),{s})"].append(_unit(1, w1 + _STEP * s))
        w2 = lanes.window(2, 2 * max(len(reds), 1))
        for pos, r in enumerate(reds):
            parts[f"V({r + 1})"].append(_unit(2, w2 + 2 * pos))
    # blue gadget: one track-1 slot per blue (shared with its edges), one
    # track-2 slot chaining into d-2 dummies
    for t in range(rb.n_blue):
        b1 = _unit(1, lanes.window(1, 1))
        parts[f"B({t + 1})"].append(b1)
        w2 = lanes.window(2, _STEP * (d - 2) + 1)
        parts[f"B({t + 1})"].append(_unit(2, w2))
        for s in range(1, d - 1):
            parts[f"DUM(B({t + 1}),{s})"].append(_unit(2, w2 + _STEP * s))
        for e, (r, tt) in enumerate(es):
            if tt == t:
                parts[f"E({e + 1})"].append(b1)
    # edge members share their red endpoint's track-2 slot
    for e, (r, t) in enumerate(es):
        red_slot = parts[f"V({r + 1})"][1]
        parts[f"E({e + 1})"].append(red_slot)
    # dummies get isolated partner slots on the other track
    for lab in parts:
        if lab.startswith("DUM("):
            part = parts[lab][0]
            other = 2 if part.track == 1 else 1
            parts[lab].append(_unit(other, lanes.window(other, 1)))

    members = tuple(MultiInterval(lab, tuple(parts[lab])) for lab in parts)
    family = IntervalFamily(kind=T_TRACK, t=2, members=members,
                            unit=True, unit_length=Fraction(1))
    params = {"k": rb.k, "d": d, "question": "distance-domset"}
    return make_bundle(NAME_UNIT2TRACK, family, params,
                       expected_unit2track_adjacency(rb, d), rb_digest(rb))


# -- complement 3-interval branch (d = 2 only) -------------------------

def _labels_co3(rb: RBInstance):
    labels = [f"V({r + 1})" for r in range(rb.n_red)]
    labels += [f"B({t + 1})" for t in range(rb.n_blue)]
    labels += [f"E({e + 1})" for e in range(len(_sorted_edges(rb)))]
    labels += [f"DUM(COLOR({p}),1)" for p in range(1, rb.k + 1)]
    labels += [f"DUM(COLOR({q}),2)" for q in range(1, rb.k + 1)]
    return labels


def expected_co3interval_adjacency(rb: RBInstance) -> Graph:
    """Intersection rules of the covering-run family (before complementing)."""
    labels = _labels_co3(rb)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()

    def join(a, b):
        ia, ib = index[a], index[b]
        if ia != ib:
            edges.add((ia, ib) if ia < ib else (ib, ia))

    es = _sorted_edges(rb)
    nr, nb = rb.n_red, rb.n_blue
    x = [f"DUM(COLOR({p}),1)" for p in range(1, rb.k + 1)]
    y = [f"DUM(COLOR({q}),2)" for q in range(1, rb.k + 1)]
    for a in range(nr):
        for t in range(nb):
            join(f"V({a + 1})", f"B({t + 1})")
        for e, (r, t) in enumerate(es):
            if r != a:
                join(f"V({a + 1})", f"E({e + 1})")
        for p in range(1, rb.k + 1):
            if rb.colors[a] != p:
                join(f"V({a + 1})", x[p - 1])
        for q in range(rb.k):
            join(f"V({a + 1})", y[q])
    for t in range(nb):
        for t2 in range(t + 1, nb):
            join(f"B({t + 1})", f"B({t2 + 1})")
        for e, (r, tt) in enumerate(es):
            if tt != t:
                join(f"B({t + 1})", f"E({e + 1})")
        for p in range(rb.k):
            join(f"B({t + 1})", x[p])
            join(f"B({t + 1})", y[p])
    for e in range(len(es)):
        for e2 in range(e + 1, len(es)):
            join(f"E({e + 1})", f"E({e2 + 1})")
        for p in range(rb.k):
            join(f"E({e + 1})", x[p])
            join(f"E({e + 1})", y[p])
    for p in range(rb.k):
        for q in range(rb.k):
            if p < q:
                join(x[p], x[q])
                join(y[p], y[q])
            if p != q:
                join(x[p], y[q])
    return Graph(len(labels), frozenset(edges), tuple(labels))


def reduce_dist_domset_co3interval(rb: RBInstance, d: int = 2) -> ReductionBundle:
    if d != 2:
        raise BadDistance("the complement 3-interval construction covers d = 2 only")
    es = _sorted_edges(rb)
    nr, nb, k = rb.n_red, rb.n_blue, rb.k
    # red slots are laid in color-sorted order so each color class occupies a
    # contiguous block that the x_p runs can exclude in one gap
    pos = {a: i for i, a in enumerate(
        sorted(range(nr), key=lambda a: (rb.colors[a], a)))}
    # slot layout on the single line, all integer coordinates:
    #   (0,1) shared left tail | red slots v^1 | blue slots b^1 | shared right
    #   tail | v^2 slots overlaid by the common b^2 span and y^3 | x^3 slots
    z1_end = 1 + nr + nb            # red slot a: (1+pos, 2+pos); blues after
    tail_end = z1_end + 1
    g0 = tail_end                   # v^2 slot a: (g0+1+a, g0+2+a)
    span_hi = g0 + max(nr, 1) + 1
    z4 = span_hi + 1                # x^3 slot p: (z4+p, z4+p+1)

    def red_slot(a):
        return (1 + pos[a], 2 + pos[a])

    def blue_slot(t):
        return (1 + nr + t, 2 + nr + t)

    def runs_excluding(points):
        """Maximal runs of (0, z1_end+1) after removing whole unit slots."""
        cuts = sorted(points)
        runs, lo = [], Fraction(0)
        for (a, b) in cuts:
            if lo < a:
                runs.append((lo, a))
            lo = Fraction(b)
        if lo < tail_end:
            runs.append((lo, Fraction(tail_end)))
        return runs

    parts = {lab: [] for lab in _labels_co3(rb)}
    for a in range(nr):
        lo, hi = red_slot(a)
        parts[f"V({a + 1})"] = [Interval(0, lo, hi),
                                Interval(0, g0 + 1 + a, g0 + 2 + a)]
    for t in range(nb):
        lo, hi = blue_slot(t)
        parts[f"B({t + 1})"] = [Interval(0, lo, hi),
                                Interval(0, g0 + 1, span_hi)]
    for e, (r, t) in enumerate(es):
        runs = runs_excluding([red_slot(r), blue_slot(t)])
        parts[f"E({e + 1})"] = [Interval(0, lo, hi) for lo, hi in runs]
    for p in range(1, k + 1):
        reds = rb.reds_of_color(p)
        if not reds:
            raise EmptyColorClass(f"red color class {p} is empty")
        lo_block = min(red_slot(a)[0] for a in reds)
        hi_block = max(red_slot(a)[1] for a in reds)
        runs = [(Fraction(0), Fraction(lo_block))]
        if hi_block < z1_end:
            runs.append((Fraction(hi_block), Fraction(z1_end)))
        parts[f"DUM(COLOR({p}),1)"] = (
            [Interval(0, lo, hi) for lo, hi in runs if lo < hi]
            + [Interval(0, z4 + p, z4 + p + 1)])
    for q in range(1, k + 1):
        runs = []
        if q > 1:
            runs.append((z4, z4 + q))           # covers x^3 slots 1..q-1
        if q < k:
            runs.append((z4 + q + 1, z4 + k + 1))  # covers x^3 slots q+1..k
        parts[f"DUM(COLOR({q}),2)"] = (
            [Interval(0, Fraction(lo), Fraction(hi)) for lo, hi in runs]
            + [Interval(0, Fraction(z1_end), Fraction(span_hi))])

    members = tuple(MultiInterval(lab, tuple(ps)) for lab, ps in parts.items())
    family = IntervalFamily(kind=T_INTERVAL, t=3, members=members)
    params = {"k": rb.k, "d": 2, "question": "distance-domset-on-complement"}
    return make_bundle(NAME_CO3INTERVAL, family, params,
                       expected_co3interval_adjacency(rb), rb_digest(rb))

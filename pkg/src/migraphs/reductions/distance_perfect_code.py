"""Reduction: multicolored clique -> d-distance perfect code, unit 2-track.

Selector structure for general d >= 2: each vertex (and each edge) is a path
of d members from its gadget's shared selector interval to a validation
column, alternating tracks along coinciding ladder slots; each gadget carries
two dummy chains of length d.  Validation couples an exclude-variant and an
include-variant staircase; for odd d both staircases swap tracks so every
member stays a 2-track interval.  Budget k' = k + C(k,2).
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import BadDistance, EmptyColorClass
from ..graphs import ColoredGraph, Graph
from ..intervals import (Interval, IntervalFamily, MultiInterval, T_TRACK,
                         STAIRCASE_WIDTH, staircase)
from .bundle import ReductionBundle, colored_digest, make_bundle

NAME = "dist_perfectcode_unit2track"

_STEP = Fraction(2, 3)


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


# atoms:
#   ("xchain", i, pos)          color selector chain, pos 0 is x_i, |pos|<=d
#   ("ychain", i, j, pos)       pair selector chain, pos 0 is y_ij
#   ("uslot", u, s)             ladder slot s (1..d-1) of vertex u
#   ("eslot", r, s)             ladder slot s of edge r
#   ("val", i, j, side, kind, col, row)   kind "exc" or "inc"
#   ("iso", n)                  isolation slots

def _atoms_intersect(a, b) -> bool:
    if a == b:
        return True
    if a[0] != b[0]:
        return False
    if a[0] in ("xchain", "ychain"):
        return a[:-1] == b[:-1] and abs(a[-1] - b[-1]) == 1
    if a[0] == "val":
        if a[1:5] != b[1:5]:
            return False
        col_a, row_a = a[5], a[6]
        col_b, row_b = b[5], b[6]
        if col_a == col_b:
            return True
        if col_a == "R":
            col_a, row_a, col_b, row_b = col_b, row_b, col_a, row_a
        if a[4] == "exc":
            return row_b < row_a
        return row_b <= row_a
    return False


def _tracks(d: int):
    """Track assignment: ladder slot parities and validation staircases."""
    def uslot_track(s):
        return 2 if s % 2 == 1 else 1

    def eslot_track(s):
        return 1 if s % 2 == 1 else 2
    if d % 2 == 0:
        val_track = {"exc": 1, "inc": 2}
    else:
        val_track = {"exc": 2, "inc": 1}
    return uslot_track, eslot_track, val_track


def _members(cg: ColoredGraph, d: int):
    k = cg.k
    row = {}
    for i in range(1, k + 1):
        for pos, u in enumerate(cg.vertices_of_color(i)):
            row[u] = pos + 1
    out = []
    for u in range(cg.n):
        i = cg.colors[u]
        prev = ("xchain", i, 0)
        for s in range(1, d):
            cur = ("uslot", u, s)
            lab = f"V({u + 1})" if s == 1 else f"VH({u + 1},{s})"
            out.append((lab, (prev, cur)))
            prev = cur
        for i2, j2 in cg.pairs():
            if i in (i2, j2):
                out.append((f"VAL1({u + 1},{i2},{j2})",
                            (prev, ("val", i2, j2, i, "exc", "R", row[u]))))
    for r, (u, v) in enumerate(cg.edge_order):
        i, j = cg.colors[u], cg.colors[v]
        prev = ("ychain", i, j, 0)
        for s in range(1, d):
            cur = ("eslot", r, s)
            lab = f"E({r + 1})" if s == 1 else f"EH({r + 1},{s})"
            out.append((lab, (prev, cur)))
            prev = cur
        out.append((f"VE({u + 1},{r + 1})",
                    (prev, ("val", i, j, i, "inc", "L", row[u]))))
        out.append((f"VE({v + 1},{r + 1})",
                    (prev, ("val", i, j, j, "inc", "L", row[v]))))
    for i, j in cg.pairs():
        for side in (i, j):
            for u in cg.vertices_of_color(side):
                out.append((f"VAL2({u + 1},{i},{j})",
                            (("val", i, j, side, "exc", "L", row[u]),
                             ("val", i, j, side, "inc", "R", row[u]))))
    iso = 0
    for i in range(1, k + 1):
        for s in range(1, d + 1):
            out.append((f"DUM(COLOR({i}),{s})",
                        (("xchain", i, -s), ("iso", iso))))
            out.append((f"DUM(COLOR({i}),{d + s})",
                        (("xchain", i, s), ("iso", iso + 1))))
            iso += 2
    for i, j in cg.pairs():
        for s in range(1, d + 1):
            out.append((f"DUM(PAIR({i},{j}),{s})",
                        (("ychain", i, j, -s), ("iso", iso))))
            out.append((f"DUM(PAIR({i},{j}),{d + s})",
                        (("ychain", i, j, s), ("iso", iso + 1))))
            iso += 2
    return out


def expected_adjacency(cg: ColoredGraph, d: int) -> Graph:
    members = _members(cg, d)
    labels = tuple(lab for lab, _ in members)
    edges = set()
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if any(_atoms_intersect(x, y)
                   for x in members[a][1] for y in members[b][1]):
                edges.add((a, b))
    return Graph(len(labels), frozenset(edges), labels)


def _realize(cg: ColoredGraph, d: int):
    uslot_track, eslot_track, val_track = _tracks(d)
    sizes = {i: len(cg.vertices_of_color(i)) for i in range(1, cg.k + 1)}
    coords = {}
    cursor = {1: Fraction(0), 2: Fraction(0)}

    def window(track, width):
        start = cursor[track]
        cursor[track] = start + Fraction(width) + 1
        return start

    def chain(track, key):
        w = window(track, 2 * d * _STEP + 1)
        center = w + d * _STEP
        for pos in range(-d, d + 1):
            coords[key + (pos,)] = Interval(track, center + pos * _STEP,
                                            center + pos * _STEP + 1)

    for i in range(1, cg.k + 1):
        chain(1, ("xchain", i))
    for i, j in cg.pairs():
        chain(2, ("ychain", i, j))
    for u in range(cg.n):
        for s in range(1, d):
            t = uslot_track(s)
            coords[("uslot", u, s)] = Interval(t, window(t, 1), cursor[t] - 1)
    for r in range(cg.m):
        for s in range(1, d):
            t = eslot_track(s)
            coords[("eslot", r, s)] = Interval(t, window(t, 1), cursor[t] - 1)
    for i, j in cg.pairs():
        for side in (i, j):
            for kind in ("exc", "inc"):
                t = val_track[kind]
                rows = sizes[side]
                anchor = window(t, STAIRCASE_WIDTH)
                variant = "exclude" if kind == "exc" else "include"
                left, right = staircase(rows, variant, anchor, t)
                for rr in range(1, rows + 1):
                    coords[("val", i, j, side, kind, "L", rr)] = left[rr - 1]
                    coords[("val", i, j, side, kind, "R", rr)] = right[rr - 1]
    for lab, atoms in _members(cg, d):
        for atom in atoms:
            if atom[0] == "iso" and atom not in coords:
                parts = [coords[a] for a in atoms if a in coords]
                track = 3 - parts[0].track if parts else 1
                coords[atom] = Interval(track, window(track, 1), cursor[track] - 1)
    return coords


def reduce_dist_perfectcode_unit2track(cg: ColoredGraph, d: int) -> ReductionBundle:
    if d < 2:
        raise BadDistance(f"d must be >= 2, got {d}")
    for i in range(1, cg.k + 1):
        if not list(cg.vertices_of_color(i)):
            raise EmptyColorClass(f"color class {i} is empty")
    coords = _realize(cg, d)
    members = tuple(MultiInterval(lab, tuple(coords[a] for a in atoms))
                    for lab, atoms in _members(cg, d))
    family = IntervalFamily(kind=T_TRACK, t=2, members=members,
                            unit=True, unit_length=Fraction(1))
    k_prime = cg.k + _choose2(cg.k)
    params = {"k": cg.k, "d": d, "k_prime": k_prime, "n": cg.n, "m": cg.m,
              "question": "distance-perfect-code"}
    return make_bundle(NAME, family, params, expected_adjacency(cg, d),
                       colored_digest(cg))


def expected_dummy_count(cg: ColoredGraph, d: int) -> int:
    return 2 * d * (cg.k + _choose2(cg.k))


def dummy_count(bundle: ReductionBundle) -> int:
    return sum(1 for lab in bundle.target.labels() if lab.startswith("DUM("))

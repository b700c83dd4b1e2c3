"""Reduction: multicolored clique -> perfect code in unit 2-track graphs.

Every interval of the family is an "atom" shared by the members that coincide
on it.  Member adjacency is computed twice: once from combinatorial atom rules
(staircase row arithmetic, anchor attachment) and once from the realized
rational geometry; the bundle constructor cross-checks the two.

Gadgets: per color an include-variant staircase on each track (vertex members
take the right column, two dummies anchor it); per color pair four
exclude-variant staircase groups (edge members take left columns, validation
members tie right columns back to the vertex gadget's left columns, four
dummies anchor the groups).  Budget k' = k + 2*C(k,2).
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import EmptyColorClass
from ..graphs import ColoredGraph, Graph
from ..intervals import (Interval, IntervalFamily, MultiInterval, T_TRACK,
                         STAIRCASE_WIDTH, staircase, staircase_left_anchor,
                         staircase_right_anchor)
from .bundle import ReductionBundle, colored_digest, make_bundle

NAME = "perfectcode_unit2track"


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


# atoms:
#   ("vg", i, track, col, row)      include staircase of color i on a track
#   ("vanchor", i, track)           meets the vg right column on that track
#   ("eg", i, j, track, side, col, row)   exclude staircase group of pair ij
#   ("eanchor", i, j, track, side)  meets the group's left column
#   ("iso", track, n)               pairwise-disjoint isolation slots


def _atoms_intersect(a, b) -> bool:
    if a == b:
        return True
    if a[0] > b[0]:
        a, b = b, a
    if a[0] == "vg" and b[0] == "vg":
        if a[1:3] != b[1:3]:
            return False
        _, _, _, col_a, row_a = a
        _, _, _, col_b, row_b = b
        if col_a == col_b:
            return True
        if col_a == "L":
            return row_b <= row_a        # include variant
        return row_a <= row_b
    if a[0] == "eg" and b[0] == "eg":
        if a[1:5] != b[1:5]:
            return False
        col_a, row_a = a[5], a[6]
        col_b, row_b = b[5], b[6]
        if col_a == col_b:
            return True
        if col_a == "L":
            return row_b < row_a         # exclude variant
        return row_a < row_b
    if a[0] == "eanchor" and b[0] == "eg":
        return a[1:5] == b[1:5] and b[5] == "L"
    if a[0] == "vanchor" and b[0] == "vg":
        return a[1:3] == b[1:3] and b[3] == "R"
    return False


def _members(cg: ColoredGraph):
    """Ordered (label, atom set) pairs for the whole family."""
    k = cg.k
    row = {}        # vertex index -> 1-based row inside its color class
    for i in range(1, k + 1):
        for pos, u in enumerate(cg.vertices_of_color(i)):
            row[u] = pos + 1
    out = []
    for u in range(cg.n):
        i = cg.colors[u]
        out.append((f"V({u + 1})",
                    (("vg", i, 1, "R", row[u]), ("vg", i, 2, "R", row[u]))))
    for r, (u, v) in enumerate(cg.edge_order):
        i, j = cg.colors[u], cg.colors[v]
        out.append((f"E({r + 1},1)",
                    (("eg", i, j, 1, i, "L", row[u]),
                     ("eg", i, j, 2, j, "L", row[v]))))
        out.append((f"E({r + 1},2)",
                    (("eg", i, j, 2, i, "L", row[u]),
                     ("eg", i, j, 1, j, "L", row[v]))))
    for i, j in cg.pairs():
        for u in cg.vertices_of_color(i):
            out.append((f"VAL({u + 1},{i},{j},1)",
                        (("vg", i, 1, "L", row[u]),
                         ("eg", i, j, 2, i, "R", row[u]))))
            out.append((f"VAL({u + 1},{i},{j},2)",
                        (("vg", i, 2, "L", row[u]),
                         ("eg", i, j, 1, i, "R", row[u]))))
        for v in cg.vertices_of_color(j):
            out.append((f"VAL({v + 1},{i},{j},1)",
                        (("vg", j, 1, "L", row[v]),
                         ("eg", i, j, 2, j, "R", row[v]))))
            out.append((f"VAL({v + 1},{i},{j},2)",
                        (("vg", j, 2, "L", row[v]),
                         ("eg", i, j, 1, j, "R", row[v]))))
    iso = 0
    for i in range(1, k + 1):
        out.append((f"DUM(COLOR({i}),1)", (("vanchor", i, 1), ("iso", 2, iso))))
        out.append((f"DUM(COLOR({i}),2)", (("vanchor", i, 2), ("iso", 1, iso + 1))))
        iso += 2
    for i, j in cg.pairs():
        for which, (track, side) in enumerate(
                [(1, i), (2, i), (1, j), (2, j)], start=1):
            out.append((f"DUM(PAIR({i},{j}),{which})",
                        (("eanchor", i, j, track, side),
                         ("iso", 3 - track, iso))))
            iso += 1
    return out


def expected_adjacency(cg: ColoredGraph) -> Graph:
    members = _members(cg)
    labels = tuple(lab for lab, _ in members)
    edges = set()
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if any(_atoms_intersect(x, y)
                   for x in members[a][1] for y in members[b][1]):
                edges.add((a, b))
    return Graph(len(labels), frozenset(edges), labels)


def _realize(cg: ColoredGraph):
    """Map every atom to a unit interval with exact rational coordinates."""
    k = cg.k
    sizes = {i: len(cg.vertices_of_color(i)) for i in range(1, k + 1)}
    coords = {}
    cursor = {1: Fraction(0), 2: Fraction(0)}

    def window(track):
        start = cursor[track]
        cursor[track] = start + STAIRCASE_WIDTH + 1
        return start

    for i in range(1, k + 1):
        rows = sizes[i]
        for track in (1, 2):
            anchor = window(track)
            left, right = staircase(rows, "include", anchor, track)
            for r in range(1, rows + 1):
                coords[("vg", i, track, "L", r)] = left[r - 1]
                coords[("vg", i, track, "R", r)] = right[r - 1]
            coords[("vanchor", i, track)] = staircase_right_anchor(rows, anchor, track)
    for i, j in cg.pairs():
        for track in (1, 2):
            for side in (i, j):
                rows = sizes[side]
                anchor = window(track)
                left, right = staircase(rows, "exclude", anchor, track)
                for r in range(1, rows + 1):
                    coords[("eg", i, j, track, side, "L", r)] = left[r - 1]
                    coords[("eg", i, j, track, side, "R", r)] = right[r - 1]
                coords[("eanchor", i, j, track, side)] = \
                    staircase_left_anchor(rows, anchor, track)
    # isolation slots last, one window each
    for lab, atoms in _members(cg):
        for atom in atoms:
            if atom[0] == "iso" and atom not in coords:
                track = atom[1]
                lo = cursor[track]
                cursor[track] += 2
                coords[atom] = Interval(track, lo, lo + 1)
    return coords


def reduce_perfectcode_unit2track(cg: ColoredGraph) -> ReductionBundle:
    for i in range(1, cg.k + 1):
        if not list(cg.vertices_of_color(i)):
            raise EmptyColorClass(f"color class {i} is empty")
    coords = _realize(cg)
    members = tuple(
        MultiInterval(lab, tuple(coords[a] for a in atoms))
        for lab, atoms in _members(cg))
    family = IntervalFamily(kind=T_TRACK, t=2, members=members,
                            unit=True, unit_length=Fraction(1))
    k_prime = cg.k + 2 * _choose2(cg.k)
    params = {"k": cg.k, "k_prime": k_prime, "n": cg.n, "m": cg.m,
              "question": "perfect-code"}
    return make_bundle(NAME, family, params, expected_adjacency(cg),
                       colored_digest(cg))


def expected_dummy_count(cg: ColoredGraph) -> int:
    return 2 * cg.k + 4 * _choose2(cg.k)


def dummy_count(bundle: ReductionBundle) -> int:
    return sum(1 for lab in bundle.target.labels() if lab.startswith("DUM("))

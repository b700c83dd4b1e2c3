"""Reduction: multicolored clique -> vertex clique partition, unit 2-interval.

One odd-cycle-complement block per color (real vertices get one in-block
interval plus a free interval) and one per color pair (each edge contributes
two members sharing one in-block interval, with free intervals coinciding
with their endpoints' free intervals).  Budget k' = 3k + 2*C(k,2).

Block geometry reuses the line representation of the cycle-complement family,
rescaled so every interval has unit length; member adjacency inside a block
is integer arithmetic on line start positions.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import EmptyColorClass
from ..graphs import ColoredGraph, Graph
from ..intervals import (Interval, IntervalFamily, MultiInterval, T_INTERVAL,
                         cycle_complement_rule_adjacent, cycle_complement_starts)
from .bundle import ReductionBundle, colored_digest, make_bundle

NAME = "cliquepartition_unit2interval"


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


def _row(cg: ColoredGraph):
    row = {}
    for i in range(1, cg.k + 1):
        for pos, u in enumerate(cg.vertices_of_color(i)):
            row[u] = pos + 1
    return row


def _members(cg: ColoredGraph):
    """(label, block id, block start tuple, free id) per member.

    block id: ("c", i) or ("p", i, j); free id ties coinciding free intervals.
    """
    row = _row(cg)
    out = []
    for i in range(1, cg.k + 1):
        n_i = len(cg.vertices_of_color(i))
        starts = cycle_complement_starts(n_i)
        for u in cg.vertices_of_color(i):
            out.append((f"V({u + 1})", ("c", i), starts[f"a{row[u]}"], u))
        for jj in range(1, 3 * n_i + 2):
            out.append((f"DUM(COLOR({i}),{jj})", ("c", i), starts[f"b{jj}"], None))
    for i, j in cg.pairs():
        rs = list(cg.edges_of_pair(i, j))
        m_ij = len(rs)
        starts = cycle_complement_starts(m_ij)
        for pos, r in enumerate(rs, start=1):
            u, v = cg.edge_order[r]
            out.append((f"VE({u + 1},{r + 1})", ("p", i, j), starts[f"a{pos}"], u))
            out.append((f"VE({v + 1},{r + 1})", ("p", i, j), starts[f"a{pos}"], v))
        for jj in range(1, 3 * m_ij + 2):
            out.append((f"DUM(PAIR({i},{j}),{jj})", ("p", i, j), starts[f"b{jj}"], None))
    return out


def _block_n(cg: ColoredGraph, block) -> int:
    if block[0] == "c":
        return len(cg.vertices_of_color(block[1]))
    return len(cg.edges_of_pair(block[1], block[2]))


def expected_adjacency(cg: ColoredGraph) -> Graph:
    members = _members(cg)
    labels = tuple(lab for lab, _, _, _ in members)
    edges = set()
    for a in range(len(members)):
        lab_a, block_a, starts_a, free_a = members[a]
        for b in range(a + 1, len(members)):
            lab_b, block_b, starts_b, free_b = members[b]
            adj = False
            if block_a == block_b:
                adj = cycle_complement_rule_adjacent(
                    _block_n(cg, block_a), starts_a, starts_b)
            if not adj and free_a is not None and free_a == free_b:
                adj = True
            if adj:
                edges.add((a, b))
    return Graph(len(labels), frozenset(edges), labels)


def reduce_cliquepartition_unit2interval(cg: ColoredGraph) -> ReductionBundle:
    for i in range(1, cg.k + 1):
        if not list(cg.vertices_of_color(i)):
            raise EmptyColorClass(f"color class {i} is empty")
    for i, j in cg.pairs():
        if not list(cg.edges_of_pair(i, j)):
            raise EmptyColorClass(f"edge class ({i},{j}) is empty")

    members_meta = _members(cg)
    # per-block windows scaled to unit intervals, then a free-slot window
    offset = Fraction(0)
    block_offset, block_scale = {}, {}
    for block in {m[1] for m in members_meta}:
        n_b = _block_n(cg, block)
        scale = Fraction(1, 2 * n_b)
        width = (7 * n_b + 1) * scale + 1
        block_offset[block] = offset
        block_scale[block] = scale
        offset += width + 1
    free_slot = {}
    for u in range(cg.n):
        free_slot[u] = offset
        offset += 2

    members = []
    for lab, block, starts, free in members_meta:
        parts = [Interval(0, block_offset[block] + s * block_scale[block],
                          block_offset[block] + s * block_scale[block] + 1)
                 for s in starts]
        if free is not None:
            parts.append(Interval(0, free_slot[free], free_slot[free] + 1))
        members.append(MultiInterval(lab, tuple(parts)))
    family = IntervalFamily(kind=T_INTERVAL, t=2, members=tuple(members),
                            unit=True, unit_length=Fraction(1))
    k_prime = 3 * cg.k + 2 * _choose2(cg.k)
    params = {"k": cg.k, "k_prime": k_prime, "n": cg.n, "m": cg.m,
              "question": "clique-partition"}
    return make_bundle(NAME, family, params, expected_adjacency(cg),
                       colored_digest(cg))


def expected_member_count(cg: ColoredGraph) -> int:
    return cg.n + 2 * cg.m + 3 * cg.n + 3 * cg.m + cg.k + _choose2(cg.k)

"""Reduction: multicolored clique -> dominating set in co-3-track graphs.

Builds a 3-track interval family from explicit integer coordinates; the
domination question is posed on the COMPLEMENT of its intersection graph with
budget k' = k + C(k,2).  The same bundle also certifies the connected and
clique variants: the canonical witness consists of pairwise-disjoint members,
which form a clique in the complement.
"""
from __future__ import annotations

from itertools import combinations

from ..graphs import ColoredGraph, Graph
from ..intervals import Interval, IntervalFamily, MultiInterval, T_TRACK
from .bundle import ReductionBundle, colored_digest, make_bundle, require_bundle

NAME = "domset_co3track"


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


def _member_labels(cg: ColoredGraph):
    labels = [f"V({p + 1})" for p in range(cg.n)]
    labels += [f"E({r + 1})" for r in range(cg.m)]
    labels += [f"COLOR({i})" for i in range(1, cg.k + 1)]
    labels += [f"PAIR({i},{j})" for i, j in cg.pairs()]
    for r, (u, v) in enumerate(cg.edge_order):
        labels.append(f"VAL({u + 1},{r + 1})")
        labels.append(f"VAL({v + 1},{r + 1})")
    return labels


def _geometry(cg: ColoredGraph):
    """The verbatim coordinate formulas, with p, q, r, i, j all 1-based."""
    n, m = cg.n, cg.m
    members = []

    def iv(track, lo, hi):
        return Interval(track, lo, hi)

    for p in range(1, n + 1):
        members.append(MultiInterval(f"V({p})", (
            iv(1, p - 1, p),
            iv(2, p - 1 + m + 1, p + m + 1),
            iv(3, p - 1 + m + 1, p + m + 1))))
    for r in range(1, m + 1):
        members.append(MultiInterval(f"E({r})", (
            iv(1, r - 1 + n + 1, r + n + 1),
            iv(2, r - 1, r),
            iv(3, r - 1, r))))
    for i in range(1, cg.k + 1):
        s_i, t_i = cg.color_range[i]
        members.append(MultiInterval(f"COLOR({i})", (
            iv(1, t_i, m + n + 1),
            iv(2, 0, s_i - 1 + m + 1),
            iv(3, m, m + 1))))
    for i, j in cg.pairs():
        s_ij, t_ij = cg.pair_range[(i, j)]
        members.append(MultiInterval(f"PAIR({i},{j})", (
            iv(1, 0, s_ij - 1 + n + 1),
            iv(2, t_ij, n + m + 1),
            iv(3, m, m + 1))))
    for r0, (u0, v0) in enumerate(cg.edge_order):
        r = r0 + 1
        i, j = cg.pair_of_edge(r0)
        s_ij, t_ij = cg.pair_range[(i, j)]
        for p in (u0 + 1, v0 + 1):
            members.append(MultiInterval(f"VAL({p},{r})", (
                iv(1, p, s_ij - 1 + n + 1),
                iv(2, t_ij, p - 1 + m + 1),
                iv(3, r - 1, r))))
    return members


def expected_adjacency(cg: ColoredGraph) -> Graph:
    """Rule-derived intersection adjacency, independent of the geometry."""
    labels = _member_labels(cg)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()

    def join(a, b):
        ia, ib = index[a], index[b]
        edges.add((ia, ib) if ia < ib else (ib, ia))

    n, m, k = cg.n, cg.m, cg.k
    vlab = [f"V({p + 1})" for p in range(n)]
    elab = [f"E({r + 1})" for r in range(m)]
    clab = {i: f"COLOR({i})" for i in range(1, k + 1)}
    plab = {pr: f"PAIR({pr[0]},{pr[1]})" for pr in cg.pairs()}
    vals = []  # (label, p0, r0, pair)
    for r0, (u0, v0) in enumerate(cg.edge_order):
        pr = cg.pair_of_edge(r0)
        vals.append((f"VAL({u0 + 1},{r0 + 1})", u0, r0, pr))
        vals.append((f"VAL({v0 + 1},{r0 + 1})", v0, r0, pr))

    # COLOR(i) meets everything except the vertex members of color i.
    for i in range(1, k + 1):
        for p0 in range(n):
            if cg.colors[p0] != i:
                join(clab[i], vlab[p0])
        for r0 in range(m):
            join(clab[i], elab[r0])
        for i2 in range(i + 1, k + 1):
            join(clab[i], clab[i2])
        for pr in cg.pairs():
            join(clab[i], plab[pr])
        for lab, _, _, _ in vals:
            join(clab[i], lab)
    # PAIR(i,j) meets everything except the edge members of pair (i,j).
    for pr in cg.pairs():
        in_pair = set(cg.edges_of_pair(*pr))
        for p0 in range(n):
            join(plab[pr], vlab[p0])
        for r0 in range(m):
            if r0 not in in_pair:
                join(plab[pr], elab[r0])
        for pr2 in cg.pairs():
            if pr2 > pr:
                join(plab[pr], plab[pr2])
        for lab, _, _, _ in vals:
            join(plab[pr], lab)
    # VAL(p,r) meets everything except V(p) and the other edges of r's pair.
    for lab, p0, r0, pr in vals:
        in_pair = set(cg.edges_of_pair(*pr))
        for q0 in range(n):
            if q0 != p0:
                join(lab, vlab[q0])
        for s0 in range(m):
            if s0 == r0 or s0 not in in_pair:
                join(lab, elab[s0])
        for lab2, _, _, _ in vals:
            if lab2 != lab:
                join(lab, lab2)
    return Graph(len(labels), frozenset(edges), tuple(labels))


def reduce_domset_co3track(cg: ColoredGraph) -> ReductionBundle:
    family = IntervalFamily(kind=T_TRACK, t=3, members=tuple(_geometry(cg)))
    k_prime = cg.k + _choose2(cg.k)
    params = {"k": cg.k, "k_prime": k_prime, "n": cg.n, "m": cg.m,
              "question": "domset-on-complement",
              "color_ranges": [list(cg.color_range[i])
                               for i in range(1, cg.k + 1)],
              "pair_ranges": [[i, j, *cg.pair_range[(i, j)]]
                              for i, j in cg.pairs()]}
    return make_bundle(NAME, family, params, expected_adjacency(cg),
                       colored_digest(cg))


def expected_member_count(cg: ColoredGraph) -> int:
    return cg.n + cg.m + cg.k + _choose2(cg.k) + 2 * cg.m


def check_selection_properties(bundle: ReductionBundle):
    """Evaluate the five structural properties of the construction on the
    realized intersection graph (vacuous ranges count as true).

    The color/pair classes come from the recorded source ranges, never from
    the realized graph, so a perturbed layout cannot mask its own violation.
    """
    require_bundle(bundle, NAME)
    g = bundle.realized_graph()
    idx = {lab: i for i, lab in enumerate(g.labels)}
    k = bundle.params["k"]

    vclass = {i + 1: list(range(s, t + 1))
              for i, (s, t) in enumerate(bundle.params["color_ranges"])}
    eclass = {(i, j): list(range(s, t + 1))
              for i, j, s, t in bundle.params["pair_ranges"]}
    val_members = []
    for lab in g.labels:
        if lab.startswith("VAL("):
            p, r = map(int, lab[4:-1].split(","))
            val_members.append((lab, p, r))

    def adjacent_to_all_except(center_lab, excluded_labels):
        c = idx[center_lab]
        excluded = {idx[lab] for lab in excluded_labels}
        for other in range(g.n):
            if other == c:
                continue
            if other in excluded:
                if g.has_edge(c, other):
                    return False
            elif not g.has_edge(c, other):
                return False
        return True

    p1 = all(not g.has_edge(idx[f"V({p})"], idx[f"V({q})"])
             for i in range(1, k + 1)
             for p, q in combinations(vclass[i], 2))
    p2 = all(adjacent_to_all_except(f"COLOR({i})",
                                    [f"V({p})" for p in vclass[i]])
             for i in range(1, k + 1))
    p3 = all(not g.has_edge(idx[f"E({r})"], idx[f"E({s})"])
             for pr in eclass for r, s in combinations(eclass[pr], 2))
    p4 = all(adjacent_to_all_except(f"PAIR({i},{j})",
                                    [f"E({r})" for r in eclass[(i, j)]])
             for (i, j) in eclass)

    def val_ok(lab, p, r):
        pr = next(pr for pr, rs in eclass.items() if r in rs)
        excluded = [f"V({p})"] + [f"E({s})" for s in eclass[pr] if s != r]
        return adjacent_to_all_except(lab, excluded)

    p5 = all(val_ok(lab, p, r) for lab, p, r in val_members)
    return (p1, p2, p3, p4, p5)


def domset_variant_checks(bundle: ReductionBundle, witness_labels) -> dict:
    """Structural predicates of a witness set on the complement graph."""
    from ..graphs import complement
    from ..solvers import is_clique, is_connected_subset, is_independent_set
    require_bundle(bundle, NAME)
    co = complement(bundle.realized_graph())
    s = {co.index_of_label(lab) for lab in witness_labels}
    return {"connected": is_connected_subset(co, s),
            "clique": is_clique(co, s),
            "independent": is_independent_set(co, s)}


def designated_mutations(bundle: ReductionBundle, count: int = 20):
    """Deterministic list of single-endpoint +2 mutations for the fuzz pass.

    Drawn from endpoint classes whose shift provably changes the realized
    adjacency or invalidates the family.
    """
    require_bundle(bundle, NAME)
    n, m, k = bundle.params["n"], bundle.params["m"], bundle.params["k"]
    # hi-shifts of the unit slots spill into the next slot and change the
    # adjacency; lo-shifts of unit slots invert the interval outright.
    # Wide COLOR/PAIR intervals are left alone: several of their adjacencies
    # are realized on two tracks at once, so one endpoint can move freely.
    muts = []
    muts += [(f"V({p})", 0, "hi") for p in range(1, n + 1)]
    muts += [(f"E({r})", 1, "hi") for r in range(1, m + 1)]
    muts += [(f"V({p})", 0, "lo") for p in range(1, n + 1)]
    muts += [(f"E({r})", 1, "lo") for r in range(1, m + 1)]
    for lab in bundle.target.labels():
        if lab.startswith("VAL("):
            muts.append((lab, 2, "lo"))
    muts += [(f"COLOR({i})", 2, "lo") for i in range(1, k + 1)]
    muts += [(f"PAIR({i},{j})", 2, "lo") for i in range(1, k + 1)
             for j in range(i + 1, k + 1)]
    return muts[:count]


def apply_mutation(family: IntervalFamily, mutation) -> IntervalFamily:
    """Shift one endpoint of one part by +2 (may produce an invalid family)."""
    label, part_index, which = mutation
    members = []
    for mem in family.members:
        if mem.label != label:
            members.append(mem)
            continue
        parts = list(mem.parts)
        part = parts[part_index]
        lo, hi = part.lo, part.hi
        if which == "lo":
            lo = lo + 2
        else:
            hi = hi + 2
        parts[part_index] = Interval(part.track, lo, hi)
        members.append(MultiInterval(mem.label, tuple(parts)))
    return IntervalFamily(kind=family.kind, t=family.t, members=tuple(members),
                          unit=family.unit, balanced=family.balanced,
                          unit_length=family.unit_length)


def mutation_detected(bundle: ReductionBundle, mutation) -> bool:
    """A mutation is detected if it invalidates the family, breaks the layout
    contract, or falsifies one of the five structural properties."""
    from ..errors import InvalidFamily
    from ..intervals import layout_matches
    try:
        mutated = apply_mutation(bundle.target, mutation)
        if not layout_matches(mutated, bundle.expected_adjacency):
            return True
        probe = ReductionBundle(bundle.name, mutated, bundle.params,
                                bundle.expected_adjacency, bundle.source_digest)
        return not all(check_selection_properties(probe))
    except (InvalidFamily, ValueError):
        return True

"""Reduction: multicolored clique -> irredundant set (plain graphs).

Each vertex becomes a triangle, each edge a 5-clique; an edge's clique is
fully joined to its two endpoint triangles, and all gadget pairs that do not
validate anything are fully joined to each other.  The irredundance question
is posed on the COMPLEMENT with budget k' = 3k + 5*C(k,2).
"""
from __future__ import annotations

from itertools import combinations

from ..graphs import ColoredGraph, Graph
from .bundle import ReductionBundle, colored_digest, make_bundle

NAME = "irredundant"


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


def _vertex_labels(cg: ColoredGraph):
    labels = []
    owner = []  # ("v", u) or ("e", r)
    for u in range(cg.n):
        for t in range(1, 4):
            labels.append(f"V({u + 1},{t})")
            owner.append(("v", u))
    for r in range(cg.m):
        for t in range(1, 6):
            labels.append(f"E({r + 1},{t})")
            owner.append(("e", r))
    return labels, owner


def _rule_adjacent(cg: ColoredGraph, oa, ob) -> bool:
    if oa == ob:
        return True                      # same gadget clique
    if oa[0] == "v" and ob[0] == "v":
        u, w = oa[1], ob[1]
        return cg.colors[u] != cg.colors[w]   # full join across color gadgets
    if oa[0] == "e" and ob[0] == "e":
        return cg.pair_of_edge(oa[1]) != cg.pair_of_edge(ob[1])
    if oa[0] == "v":
        oa, ob = ob, oa
    r, u = oa[1], ob[1]
    endpoints = cg.edge_order[r]
    i, j = cg.pair_of_edge(r)
    if cg.colors[u] not in (i, j):
        return True                      # full join to unrelated color gadgets
    return u in endpoints                # validation: endpoints only


def expected_adjacency(cg: ColoredGraph) -> Graph:
    labels, owner = _vertex_labels(cg)
    n = len(labels)
    edges = set()
    for a in range(n):
        for b in range(a + 1, n):
            if _rule_adjacent(cg, owner[a], owner[b]):
                edges.add((a, b))
    return Graph(n, frozenset(edges), tuple(labels))


def reduce_irredundant(cg: ColoredGraph) -> ReductionBundle:
    """Builds the gadget graph constructively (cliques plus explicit joins)
    and cross-checks it against the pairwise rule evaluation."""
    labels, owner = _vertex_labels(cg)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()

    def join_all(group_a, group_b):
        for a in group_a:
            for b in group_b:
                edges.add((a, b) if a < b else (b, a))

    vgroup = {u: [index[f"V({u + 1},{t})"] for t in range(1, 4)]
              for u in range(cg.n)}
    egroup = {r: [index[f"E({r + 1},{t})"] for t in range(1, 6)]
              for r in range(cg.m)}
    for u in range(cg.n):
        edges.update(tuple(sorted(p)) for p in combinations(vgroup[u], 2))
    for r in range(cg.m):
        edges.update(tuple(sorted(p)) for p in combinations(egroup[r], 2))
    for r, (u, v) in enumerate(cg.edge_order):
        join_all(egroup[r], vgroup[u])
        join_all(egroup[r], vgroup[v])
        i, j = cg.pair_of_edge(r)
        for w in range(cg.n):
            if cg.colors[w] not in (i, j):
                join_all(egroup[r], vgroup[w])
    for u in range(cg.n):
        for w in range(u + 1, cg.n):
            if cg.colors[u] != cg.colors[w]:
                join_all(vgroup[u], vgroup[w])
    for r in range(cg.m):
        for s in range(r + 1, cg.m):
            if cg.pair_of_edge(r) != cg.pair_of_edge(s):
                join_all(egroup[r], egroup[s])

    target = Graph(len(labels), frozenset(edges), tuple(labels))
    k_prime = 3 * cg.k + 5 * _choose2(cg.k)
    params = {"k": cg.k, "k_prime": k_prime, "n": cg.n, "m": cg.m,
              "question": "irredundant-on-complement"}
    return make_bundle(NAME, target, params, expected_adjacency(cg),
                       colored_digest(cg))


def expected_vertex_count(cg: ColoredGraph) -> int:
    return 3 * cg.n + 5 * cg.m

"""Reductions: clique -> separating vertices (plus the cutting variants).

Balanced 2-track target: an n-clique of vertex members sharing one long
track-1 interval, plus one two-member path per edge hung between its
endpoints.  Co-balanced 3-track target: vertex members pairwise disjoint
(complement clique), one edge member meeting every vertex member except its
endpoints; the question is posed on the complement.  Cutting parameters for
the connected/components variants derive from the same bundles.
"""
from __future__ import annotations

from fractions import Fraction

from ..errors import TooFewVertices
from ..graphs import Graph
from ..intervals import Interval, IntervalFamily, MultiInterval, T_TRACK
from .bundle import ReductionBundle, graph_digest, make_bundle

NAME_BALANCED2 = "sep_balanced2track"
NAME_COBAL3 = "sep_cobal3track"


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


def _sorted_edges(g: Graph):
    return sorted(g.edges)


def _labels_balanced2(g: Graph):
    labels = [f"V({p + 1})" for p in range(g.n)]
    for r, (u, v) in enumerate(_sorted_edges(g)):
        labels += [f"VE({u + 1},{r + 1})", f"VE({v + 1},{r + 1})"]
    return labels


def expected_balanced2_adjacency(g: Graph) -> Graph:
    labels = _labels_balanced2(g)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()

    def join(a, b):
        ia, ib = index[a], index[b]
        edges.add((ia, ib) if ia < ib else (ib, ia))

    for u in range(g.n):
        for v in range(u + 1, g.n):
            join(f"V({u + 1})", f"V({v + 1})")
    for r, (u, v) in enumerate(_sorted_edges(g)):
        join(f"VE({u + 1},{r + 1})", f"V({u + 1})")
        join(f"VE({v + 1},{r + 1})", f"V({v + 1})")
        join(f"VE({u + 1},{r + 1})", f"VE({v + 1},{r + 1})")
    return Graph(len(labels), frozenset(edges), tuple(labels))


def reduce_sep_balanced2track(g: Graph, k: int) -> ReductionBundle:
    n, m = g.n, g.m
    if n <= k + 2 * _choose2(k):
        raise TooFewVertices(
            f"need n > k + 2*C(k,2) = {k + 2 * _choose2(k)}, got n = {n}")
    es = _sorted_edges(g)
    parts = {lab: [] for lab in _labels_balanced2(g)}
    x = Interval(1, 0, n)                       # shared track-1 interval, length n
    edge_slot = {r: Interval(1, n + r, n + r + 1) for r in range(m)}
    for p in range(n):
        big = Interval(2, Fraction(p) * n, Fraction(p + 1) * n)
        parts[f"V({p + 1})"] = [x, big]
    used = {p: 0 for p in range(n)}
    for r, (u, v) in enumerate(es):
        for p in (u, v):
            sub = Interval(2, p * n + used[p], p * n + used[p] + 1)
            used[p] += 1
            parts[f"VE({p + 1},{r + 1})"] = [edge_slot[r], sub]
    members = tuple(MultiInterval(lab, tuple(ps)) for lab, ps in parts.items())
    family = IntervalFamily(kind=T_TRACK, t=2, members=members, balanced=True)
    params = {"k": k, "k_prime": k, "l_prime": 2 * _choose2(k),
              "n": n, "m": m, "question": "separating",
              "bundle_kind": "balanced2track"}
    return make_bundle(NAME_BALANCED2, family, params,
                       expected_balanced2_adjacency(g), graph_digest(g))


def _labels_cobal3(g: Graph):
    return ([f"V({p + 1})" for p in range(g.n)]
            + [f"E({r + 1})" for r in range(g.m)])


def expected_cobal3_adjacency(g: Graph) -> Graph:
    """Intersection rules (before complementing): edges pairwise meet, and an
    edge member meets every vertex member except its two endpoints."""
    labels = _labels_cobal3(g)
    index = {lab: i for i, lab in enumerate(labels)}
    edges = set()
    es = _sorted_edges(g)
    for r, (u, v) in enumerate(es):
        for p in range(g.n):
            if p not in (u, v):
                a, b = sorted((index[f"E({r + 1})"], index[f"V({p + 1})"]))
                edges.add((a, b))
        for r2 in range(r + 1, len(es)):
            edges.add((index[f"E({r + 1})"], index[f"E({r2 + 1})"]))
    return Graph(len(labels), frozenset(edges), tuple(labels))


def reduce_sep_cobal3track(g: Graph, k: int) -> ReductionBundle:
    n, m = g.n, g.m
    if n <= k + _choose2(k):
        raise TooFewVertices(
            f"need n > k + C(k,2) = {k + _choose2(k)}, got n = {n}")
    es = _sorted_edges(g)
    parts = {}
    # unit vertex intervals: abutting on tracks 1 and 3, spread with gaps of
    # length n on track 2
    for p in range(n):
        parts[f"V({p + 1})"] = [
            Interval(1, p, p + 1),
            Interval(2, p * (n + 1), p * (n + 1) + 1),
            Interval(3, p, p + 1)]
    for r, (u, v) in enumerate(es):
        i, j = u + 1, v + 1                     # 1-based endpoints, i < j
        length = (j - i) * (n + 1) - 1          # between n and n^2
        parts[f"E({r + 1})"] = [
            Interval(1, i - 1 - length, i - 1),
            Interval(2, (i - 1) * (n + 1) + 1, (i - 1) * (n + 1) + 1 + length),
            Interval(3, j, j + length)]
    members = tuple(MultiInterval(lab, tuple(parts[lab]))
                    for lab in _labels_cobal3(g))
    family = IntervalFamily(kind=T_TRACK, t=3, members=members, balanced=True)
    params = {"k": k, "k_prime": k, "l_prime": _choose2(k),
              "n": n, "m": m, "question": "separating-on-complement",
              "bundle_kind": "cobal3track"}
    return make_bundle(NAME_COBAL3, family, params,
                       expected_cobal3_adjacency(g), graph_digest(g))


def derive_cutting_params(bundle: ReductionBundle, variant: str) -> dict:
    """(k, l) for the cutting variants of a separation bundle."""
    from ..errors import WrongBundleKind
    kind = bundle.params.get("bundle_kind")
    if kind not in ("balanced2track", "cobal3track"):
        raise WrongBundleKind(f"not a separation bundle: {bundle.name}")
    k = bundle.params["k"]
    n, m = bundle.params["n"], bundle.params["m"]
    if variant == "cut_components":
        return {"k": k, "l": _choose2(k) + 1, "variant": variant}
    if variant == "cut_connected":
        if kind == "balanced2track":
            l = n + 2 * m - 2 * _choose2(k) - k
        else:
            l = n + m - _choose2(k) - k
        return {"k": k, "l": l, "variant": variant}
    raise ValueError(f"unknown cutting variant {variant!r}")

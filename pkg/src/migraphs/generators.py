"""Seeded instance generators for the verification harness.

Planted modes guarantee the declared answer: "yes" instances embed a witness
by construction, "no" instances are rebuilt deterministically until the
oracle confirms infeasibility.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadSpec
from .graphs import Graph, RBInstance, canonicalize_colored, ColoredGraph
from .solvers import solve_multicolored_clique, solve_rb_domset

_MAX_RESAMPLES = 500


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int
    edge_probability: float = 0.5
    planted: str = "random"        # yes | no | random
    seed: int = 0


def _color_assignment(rng, n, k):
    colors = list(range(1, k + 1)) + [rng.randrange(1, k + 1)
                                      for _ in range(n - k)]
    rng.shuffle(colors)
    return colors


def _sample_colored(rng, spec: GenSpec) -> ColoredGraph:
    colors = _color_assignment(rng, spec.n, spec.k)
    clique = []
    for i in range(1, spec.k + 1):
        members = [u for u in range(spec.n) if colors[u] == i]
        clique.append(rng.choice(members))
    edges = set()
    for u in range(spec.n):
        for v in range(u + 1, spec.n):
            if colors[u] != colors[v] and rng.random() < spec.edge_probability:
                edges.add((u, v))
    if spec.planted in ("yes", "no"):
        for u, v in ((a, b) for a in clique for b in clique if a < b):
            edges.add((u, v))
    if spec.planted == "no":
        u, v = sorted(rng.choice(sorted((a, b) if a < b else (b, a)
                                        for a in clique for b in clique if a != b)))
        edges.discard((u, v))
    return canonicalize_colored(Graph(spec.n, frozenset(edges)), colors, spec.k)


def gen_colored_graph(spec: GenSpec) -> ColoredGraph:
    """Deterministic under seed; planted answers are oracle-confirmed."""
    if spec.k < 1 or spec.n < spec.k:
        raise BadSpec(f"need n >= k >= 1, got n={spec.n}, k={spec.k}")
    if not 0 <= spec.edge_probability <= 1:
        raise BadSpec("edge probability must lie in [0,1]")
    if spec.planted not in ("yes", "no", "random"):
        raise BadSpec(f"unknown planted mode {spec.planted!r}")
    if spec.planted == "no" and spec.k < 2:
        raise BadSpec("a planted no-instance needs k >= 2")
    rng = random.Random(spec.seed)
    for _ in range(_MAX_RESAMPLES):
        cg = _sample_colored(rng, spec)
        if spec.planted == "yes":
            assert solve_multicolored_clique(cg).status == "feasible"
            return cg
        if spec.planted == "no":
            if solve_multicolored_clique(cg).status == "infeasible":
                return cg
            continue
        return cg
    raise BadSpec(f"could not realize a planted {spec.planted}-instance "
                  f"for n={spec.n}, k={spec.k}, p={spec.edge_probability}")


def gen_nonempty_pairs_colored(spec: GenSpec) -> ColoredGraph:
    """Like gen_colored_graph but resamples until every color-pair class is
    nonempty (several reductions assume it; a planted no-instance therefore
    deletes a clique edge only from a pair with a second edge)."""
    for attempt in range(_MAX_RESAMPLES):
        sub = GenSpec(spec.n, spec.k, spec.edge_probability, spec.planted,
                      spec.seed + 7919 * attempt)
        cg = gen_colored_graph(sub)
        if all(len(cg.edges_of_pair(i, j)) > 0 for i, j in cg.pairs()):
            return cg
    raise BadSpec(f"could not realize nonempty pair classes for n={spec.n}, "
                  f"k={spec.k}, p={spec.edge_probability}")


def gen_rb_instance(n_red: int, k: int, n_blue: int, p: float,
                    planted: str = "random", seed: int = 0) -> RBInstance:
    """Red/blue instances; planted yes embeds a colorful dominating set."""
    if k < 1 or n_red < k:
        raise BadSpec(f"need n_red >= k >= 1, got n_red={n_red}, k={k}")
    if n_blue < 0 or not 0 <= p <= 1:
        raise BadSpec("need n_blue >= 0 and p in [0,1]")
    if planted not in ("yes", "no", "random"):
        raise BadSpec(f"unknown planted mode {planted!r}")
    if planted == "no" and n_blue == 0:
        raise BadSpec("every instance with no blue vertices is feasible")
    rng = random.Random(seed)
    for _ in range(_MAX_RESAMPLES):
        colors = _color_assignment(rng, n_red, k)
        edges = {(r, b) for r in range(n_red) for b in range(n_blue)
                 if rng.random() < p}
        if planted == "yes":
            chosen = []
            for i in range(1, k + 1):
                members = [u for u in range(n_red) if colors[u] == i]
                chosen.append(rng.choice(members))
            for b in range(n_blue):
                edges.add((rng.choice(chosen), b))
        rb = RBInstance(n_red, n_blue, k, tuple(colors), frozenset(edges))
        if planted == "yes":
            assert solve_rb_domset(rb).status == "feasible"
            return rb
        if planted == "no":
            if solve_rb_domset(rb).status == "infeasible":
                return rb
            continue
        return rb
    raise BadSpec(f"could not realize a planted {planted}-instance for "
                  f"n_red={n_red}, k={k}, n_blue={n_blue}, p={p}")


def gen_plain_graph(n: int, p: float, seed: int, planted_clique: int = 0,
                    forbid_clique: int = 0) -> Graph:
    """Random graph; optionally embed a clique or resample until none of the
    given size exists."""
    from .solvers import solve_clique
    rng = random.Random(seed)
    density = p
    for _ in range(_MAX_RESAMPLES):
        edges = {(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < density}
        if planted_clique > 1:
            members = rng.sample(range(n), planted_clique)
            edges.update((min(a, b), max(a, b))
                         for a in members for b in members if a != b)
        g = Graph(n, frozenset(edges))
        if forbid_clique and solve_clique(g, forbid_clique).status == "feasible":
            density *= 0.7          # thin out until the clique disappears
            continue
        return g
    raise BadSpec(f"could not avoid a K_{forbid_clique} at n={n}, p={p}")


def worked_example_colored() -> ColoredGraph:
    """The bundled 4-vertex, 4-edge, 3-color demonstration instance."""
    g = Graph(4, frozenset({(0, 2), (0, 3), (1, 3), (2, 3)}))
    return canonicalize_colored(g, (1, 1, 2, 3))


def worked_example_rb() -> RBInstance:
    """The bundled red/blue demonstration instance (3 reds in 2 colors,
    3 blues, 5 edges)."""
    return RBInstance(3, 3, 2, (1, 1, 2),
                      frozenset({(0, 0), (0, 1), (1, 0), (2, 0), (2, 2)}))

"""Exhaustive exact solvers for every source and target problem.

Each solver performs a complete search over Python-int bitsets and returns a
SolveReport carrying a witness, a deterministic node count, and a status that
distinguishes a proven "infeasible" from a search that hit its node cap
("exhausted").  Searches iterate vertices in index order, so results are
deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import Graph, complement, connected_components, graph_power, induced_subgraph
from .graphs import ColoredGraph, RBInstance

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchLimits:
    max_nodes: int = 50_000_000


@dataclass
class SolveReport:
    status: str
    witness: object = None
    nodes_explored: int = 0
    limits: SearchLimits = SearchLimits()
    problem: str = ""

    @property
    def feasible(self) -> bool:
        if self.status == EXHAUSTED:
            raise RuntimeError(f"{self.problem}: search exhausted, answer unknown")
        return self.status == FEASIBLE

    @property
    def decided(self) -> bool:
        return self.status != EXHAUSTED


class _Exhausted(Exception):
    pass


class _Counter:
    __slots__ = ("nodes", "cap")

    def __init__(self, limits: SearchLimits):
        self.nodes = 0
        self.cap = limits.max_nodes

    def tick(self):
        self.nodes += 1
        if self.nodes > self.cap:
            raise _Exhausted()


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def _report(problem, limits, counter, witness=None, status=None):
    if status is None:
        status = FEASIBLE if witness is not None else INFEASIBLE
    return SolveReport(status=status, witness=witness,
                       nodes_explored=counter.nodes, limits=limits, problem=problem)


# -- checker predicates (independent of the searches) -----------------

def is_dominating_set(g: Graph, s) -> bool:
    closed = g.closed_masks()
    covered = 0
    for u in s:
        covered |= closed[u]
    return covered == (1 << g.n) - 1


def is_clique(g: Graph, s) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def is_independent_set(g: Graph, s) -> bool:
    return not any(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def is_connected_subset(g: Graph, s) -> bool:
    s = set(s)
    if len(s) <= 1:
        return True
    return len(connected_components(induced_subgraph(g, s))) == 1


def is_perfect_code(g: Graph, d) -> bool:
    """Every vertex sees exactly one member of d in its closed neighborhood."""
    closed = g.closed_masks()
    dset = set(d)
    return all(sum(1 for u in dset if closed[v] >> u & 1) == 1 for v in range(g.n))


def is_irredundant_set(g: Graph, s) -> bool:
    closed = g.closed_masks()
    s = list(s)
    for u in s:
        others = 0
        for v in s:
            if v != u:
                others |= closed[v]
        if closed[u] & ~others:
            continue
        return False
    return True


def is_separating(g: Graph, k: int, l: int, deleted) -> bool:
    deleted = set(deleted)
    if len(deleted) > k:
        return False
    rest = [u for u in range(g.n) if u not in deleted]
    comps = connected_components(induced_subgraph(g, rest))
    return _subset_sum_hits([len(c) for c in comps], l)


def _subset_sum_hits(sizes, target: int) -> bool:
    if target < 0:
        return False
    reach = 1
    for s in sizes:
        reach |= reach << s
    return bool(reach >> target & 1)


# -- multicolored clique ----------------------------------------------

def solve_multicolored_clique(cg: ColoredGraph, limits=SearchLimits()) -> SolveReport:
    """One vertex per color, pairwise adjacent."""
    counter = _Counter(limits)
    g = cg.graph
    adj = g.adjacency_masks()
    classes = sorted((list(cg.vertices_of_color(i)) for i in range(1, cg.k + 1)),
                     key=len)
    witness = None

    def rec(idx, chosen, cand_mask):
        nonlocal witness
        counter.tick()
        if idx == len(classes):
            witness = frozenset(chosen)
            return True
        for u in classes[idx]:
            if cand_mask >> u & 1:
                if rec(idx + 1, chosen + [u], cand_mask & adj[u]):
                    return True
        return False

    try:
        rec(0, [], (1 << g.n) - 1)
    except _Exhausted:
        return _report("multicolored_clique", limits, counter, status=EXHAUSTED)
    return _report("multicolored_clique", limits, counter, witness)


# -- dominating set and variants --------------------------------------

def _connected_subsets_upto(g: Graph, kmax: int, counter):
    """Yield every connected vertex subset of size 1..kmax exactly once."""
    adj = g.adjacency_masks()
    n = g.n
    for s in range(n):
        base_forbidden = (1 << s) - 1  # sets are rooted at their minimum vertex

        def grow(cur_mask, cur, ext, forbidden):
            counter.tick()
            yield frozenset(cur)
            if len(cur) == kmax:
                return
            ext = list(ext)
            banned = forbidden
            for i, v in enumerate(ext):
                new_ext = [w for w in ext[i + 1:]]
                extra = adj[v] & ~cur_mask & ~banned
                for w in _bits(extra):
                    if w not in new_ext:
                        new_ext.append(w)
                yield from grow(cur_mask | 1 << v, cur + [v],
                                new_ext, banned | 1 << v)
                banned |= 1 << v
        start_ext = [v for v in _bits(adj[s] & ~base_forbidden)]
        yield from grow(1 << s, [s], start_ext, base_forbidden | 1 << s)


def solve_domset(g: Graph, k: int, variant: str = "plain",
                 exact_size: bool = False, limits=SearchLimits()) -> SolveReport:
    """Dominating set of size <= k (== k with exact_size) under a variant predicate.

    Variants: plain, connected, independent, clique.  The plain/clique/
    independent searches branch on an undominated vertex over its closed
    neighborhood (complete because those classes are closed under subsets);
    the connected variant enumerates connected subsets instead.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    problem = f"domset[{variant}]"
    counter = _Counter(limits)
    n = g.n
    full = (1 << n) - 1
    if n == 0:
        return _report(problem, limits, counter, frozenset())

    closed = g.closed_masks()
    adj = g.adjacency_masks()

    if variant == "connected":
        try:
            if k >= 1:
                for s in _connected_subsets_upto(g, k, counter):
                    if (not exact_size or len(s) == k) and is_dominating_set(g, s):
                        return _report(problem, limits, counter, s)
        except _Exhausted:
            return _report(problem, limits, counter, status=EXHAUSTED)
        return _report(problem, limits, counter)

    if exact_size and variant != "plain":
        # exact-size variant search: direct enumeration (small instances only)
        try:
            pred = {"independent": is_independent_set, "clique": is_clique}[variant]
            for cand in combinations(range(n), k):
                counter.tick()
                if is_dominating_set(g, cand) and pred(g, cand):
                    return _report(problem, limits, counter, frozenset(cand))
            return _report(problem, limits, counter)
        except _Exhausted:
            return _report(problem, limits, counter, status=EXHAUSTED)

    witness = None

    def rec(chosen, dom, allowed, banned):
        nonlocal witness
        counter.tick()
        if dom == full:
            witness = frozenset(chosen)
            return True
        if len(chosen) == k:
            return False
        best_v, best_cands, best_cnt = -1, 0, n + 2
        undom = full & ~dom
        for v in _bits(undom):
            cands = closed[v] & allowed & ~banned
            cnt = bin(cands).count("1")
            if cnt < best_cnt:
                best_v, best_cands, best_cnt = v, cands, cnt
                if cnt <= 1:
                    break
        if best_cands == 0:
            return False
        local_ban = banned
        for u in _bits(best_cands):
            if variant == "clique":
                new_allowed = allowed & adj[u]
            elif variant == "independent":
                new_allowed = allowed & ~closed[u]
            else:
                new_allowed = allowed
            if rec(chosen + [u], dom | closed[u], new_allowed, local_ban):
                return True
            local_ban |= 1 << u
        return False

    try:
        rec([], 0, full, 0)
    except _Exhausted:
        return _report(problem, limits, counter, status=EXHAUSTED)

    if witness is not None and exact_size and len(witness) < k:
        if n < k:
            return _report(problem, limits, counter)
        pad = [u for u in range(n) if u not in witness]
        witness = frozenset(witness | set(pad[:k - len(witness)]))
    return _report(problem, limits, counter, witness)


def solve_distance_domset(g: Graph, k: int, d: int,
                          variant: str = "plain", exact_size: bool = False,
                          limits=SearchLimits()) -> SolveReport:
    """Dominating set in the d-th power of g."""
    if d < 1:
        raise ValueError("d must be >= 1")
    rep = solve_domset(graph_power(g, d), k, variant, exact_size, limits)
    rep.problem = f"distance_domset[d={d}]"
    return rep


# -- perfect codes ------------------------------------------------------

def solve_perfect_code(g: Graph, k: int, exact_size: bool = True,
                       limits=SearchLimits()) -> SolveReport:
    """Set D with |N[v] & D| == 1 for every v; |D| == k (or <= k).

    A perfect code is an exact cover of V by closed neighborhoods, so the
    search branches on the uncovered vertex with the fewest viable covers.
    Branches are disjoint (two covers of one vertex overlap at it), hence the
    enumeration is complete without an exclusion set.
    """
    problem = "perfect_code"
    counter = _Counter(limits)
    n = g.n
    full = (1 << n) - 1
    closed = g.closed_masks()
    if n == 0:
        status = FEASIBLE if (not exact_size or k == 0) else INFEASIBLE
        return SolveReport(status, frozenset() if status == FEASIBLE else None,
                           0, limits, problem)

    witness = None

    def rec(chosen, covered):
        nonlocal witness
        counter.tick()
        if covered == full:
            if len(chosen) == k or (not exact_size and len(chosen) <= k):
                witness = frozenset(chosen)
                return True
            return False
        if len(chosen) >= k:
            return False
        best_v, best_cands, best_cnt = -1, 0, n + 2
        for v in _bits(full & ~covered):
            cands = 0
            for u in _bits(closed[v]):
                if closed[u] & covered == 0:
                    cands |= 1 << u
            cnt = bin(cands).count("1")
            if cnt < best_cnt:
                best_v, best_cands, best_cnt = v, cands, cnt
                if cnt == 0:
                    return False
                if cnt == 1:
                    break
        for u in _bits(best_cands):
            if rec(chosen + [u], covered | closed[u]):
                return True
        return False

    try:
        rec([], 0)
    except _Exhausted:
        return _report(problem, limits, counter, status=EXHAUSTED)
    return _report(problem, limits, counter, witness)


def solve_distance_perfect_code(g: Graph, k: int, d: int,
                                exact_size: bool = True,
                                limits=SearchLimits()) -> SolveReport:
    if d < 1:
        raise ValueError("d must be >= 1")
    rep = solve_perfect_code(graph_power(g, d), k, exact_size, limits)
    rep.problem = f"distance_perfect_code[d={d}]"
    return rep


# -- red/blue colorful domination --------------------------------------

def solve_rb_domset(rb: RBInstance, k: int | None = None,
                    limits=SearchLimits()) -> SolveReport:
    """One red vertex per color such that every blue vertex has a chosen neighbor."""
    counter = _Counter(limits)
    if k is None:
        k = rb.k
    if k != rb.k:
        raise ValueError("k must equal the number of red colors")
    blue_full = (1 << rb.n_blue) - 1
    cover = [0] * rb.n_red
    for r, b in rb.edges:
        cover[r] |= 1 << b
    classes = [rb.reds_of_color(i) for i in range(1, rb.k + 1)]
    rest_cover = [0] * (len(classes) + 1)
    for i in range(len(classes) - 1, -1, -1):
        m = rest_cover[i + 1]
        for r in classes[i]:
            m |= cover[r]
        rest_cover[i] = m
    witness = None

    def rec(idx, chosen, covered):
        nonlocal witness
        counter.tick()
        if covered | rest_cover[idx] != blue_full:
            return False
        if idx == len(classes):
            witness = frozenset(chosen)
            return True
        for r in classes[idx]:
            if rec(idx + 1, chosen + [r], covered | cover[r]):
                return True
        return False

    try:
        rec(0, [], 0)
    except _Exhausted:
        return _report("rb_domset", limits, counter, status=EXHAUSTED)
    return _report("rb_domset", limits, counter, witness)


# -- cliques and colorings ----------------------------------------------

def solve_clique(g: Graph, k: int, limits=SearchLimits()) -> SolveReport:
    counter = _Counter(limits)
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return SolveReport(FEASIBLE, frozenset(), 0, limits, "clique")
    adj = g.adjacency_masks()
    witness = None

    def rec(chosen, cands):
        nonlocal witness
        counter.tick()
        if len(chosen) == k:
            witness = frozenset(chosen)
            return True
        if len(chosen) + bin(cands).count("1") < k:
            return False
        local = cands
        for u in _bits(cands):
            if rec(chosen + [u], local & adj[u]):
                return True
            local &= ~(1 << u)
        return False

    try:
        rec([], (1 << g.n) - 1)
    except _Exhausted:
        return _report("clique", limits, counter, status=EXHAUSTED)
    return _report("clique", limits, counter, witness)


def exact_coloring(g: Graph, k: int, limits=SearchLimits(), counter=None):
    """Proper coloring with at most k colors, or None.  DSATUR-style search."""
    counter = counter or _Counter(limits)
    n = g.n
    adj = g.adjacency_masks()
    color = [0] * n  # 0 = uncolored, else 1..k

    def pick():
        best, key = -1, None
        for v in range(n):
            if color[v]:
                continue
            sat = {color[u] for u in _bits(adj[v]) if color[u]}
            cand = (len(sat), bin(adj[v]).count("1"), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def rec(colored_count, used):
        counter.tick()
        if colored_count == n:
            return True
        v = pick()
        neighbor_colors = {color[u] for u in _bits(adj[v]) if color[u]}
        for c in range(1, min(used + 1, k) + 1):
            if c in neighbor_colors:
                continue
            color[v] = c
            if rec(colored_count + 1, max(used, c)):
                return True
            color[v] = 0
        return False

    if rec(0, 0):
        classes = {}
        for v, c in enumerate(color):
            classes.setdefault(c, set()).add(v)
        return [frozenset(s) for _, s in sorted(classes.items())]
    return None


def chromatic_number(g: Graph, limits=SearchLimits()) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if exact_coloring(g, k, limits) is not None:
            return k
    raise AssertionError("unreachable")


def solve_clique_partition(g: Graph, k: int, limits=SearchLimits()) -> SolveReport:
    """Partition of V into at most k cliques: proper coloring of the complement."""
    counter = _Counter(limits)
    if g.n == 0:
        return SolveReport(FEASIBLE, (), 0, limits, "clique_partition")
    if k <= 0:
        return SolveReport(INFEASIBLE, None, 0, limits, "clique_partition")
    try:
        classes = exact_coloring(complement(g), k, limits, counter)
    except _Exhausted:
        return _report("clique_partition", limits, counter, status=EXHAUSTED)
    if classes is None:
        return _report("clique_partition", limits, counter)
    return _report("clique_partition", limits, counter, tuple(classes))


# -- separation ----------------------------------------------------------

def _deletion_sets(n: int, k: int):
    for size in range(0, k + 1):
        yield from combinations(range(n), size)


def solve_separating(g: Graph, k: int, l: int, limits=SearchLimits()) -> SolveReport:
    """Partition V = X + S + Y with |X| = l, |S| <= k and no X-Y edge.

    X must be a union of connected components of g - S, so each candidate S is
    checked by exact subset-sum over component sizes.
    """
    counter = _Counter(limits)
    try:
        for s in _deletion_sets(g.n, k):
            counter.tick()
            rest = [u for u in range(g.n) if u not in s]
            comps = connected_components(induced_subgraph(g, rest))
            if _subset_sum_hits([len(c) for c in comps], l):
                return _report("separating", limits, counter, frozenset(s))
    except _Exhausted:
        return _report("separating", limits, counter, status=EXHAUSTED)
    return _report("separating", limits, counter)


def solve_cut_connected(g: Graph, k: int, l: int, limits=SearchLimits()) -> SolveReport:
    """Separate exactly l vertices inducing a connected subgraph.

    A connected union of components is a single component, so this asks for a
    deletion set leaving some component of size exactly l.
    """
    counter = _Counter(limits)
    if l == 0:
        return SolveReport(FEASIBLE, frozenset(), 0, limits, "cut_connected")
    try:
        for s in _deletion_sets(g.n, k):
            counter.tick()
            rest = [u for u in range(g.n) if u not in s]
            comps = connected_components(induced_subgraph(g, rest))
            if any(len(c) == l for c in comps):
                return _report("cut_connected", limits, counter, frozenset(s))
    except _Exhausted:
        return _report("cut_connected", limits, counter, status=EXHAUSTED)
    return _report("cut_connected", limits, counter)


def solve_cut_components(g: Graph, k: int, l: int, limits=SearchLimits()) -> SolveReport:
    """Delete at most k vertices so that at least l components remain."""
    counter = _Counter(limits)
    try:
        for s in _deletion_sets(g.n, k):
            counter.tick()
            rest = [u for u in range(g.n) if u not in s]
            if len(connected_components(induced_subgraph(g, rest))) >= l:
                return _report("cut_components", limits, counter, frozenset(s))
    except _Exhausted:
        return _report("cut_components", limits, counter, status=EXHAUSTED)
    return _report("cut_components", limits, counter)


# -- irredundance ---------------------------------------------------------

def solve_irredundant(g: Graph, k: int, exact_size: bool = True,
                      limits=SearchLimits()) -> SolveReport:
    """Irredundant set of size k (irredundance is hereditary, so any larger
    irredundant set contains one of size exactly k).

    Tries the independence shortcut first (every independent set is
    irredundant), then a complete DFS over index-ordered extensions, pruning
    as soon as a partial set goes redundant; adding vertices only shrinks
    private pools, so the prune is sound.
    """
    problem = "irredundant"
    counter = _Counter(limits)
    n = g.n
    if not exact_size or k == 0:
        # the empty set is irredundant, so "size <= k" is trivially feasible
        return SolveReport(FEASIBLE, frozenset(), 0, limits, problem)
    if k > n:
        return SolveReport(INFEASIBLE, None, 0, limits, problem)

    shortcut = solve_clique(complement(g), k, limits)
    counter.nodes += shortcut.nodes_explored
    if shortcut.status == FEASIBLE:
        return _report(problem, limits, counter, shortcut.witness)

    closed = g.closed_masks()
    witness = None

    def rec(members, pools, taken, start):
        nonlocal witness
        counter.tick()
        if len(members) == k:
            witness = frozenset(members)
            return True
        if n - start < k - len(members):
            return False
        for w in range(start, n):
            nw = closed[w]
            new_pools = [p & ~nw for p in pools]
            if all(new_pools):
                pool_w = nw & ~taken
                if pool_w:
                    if rec(members + [w], new_pools + [pool_w],
                           taken | nw, w + 1):
                        return True
        return False

    try:
        rec([], [], 0, 0)
    except _Exhausted:
        return _report(problem, limits, counter, status=EXHAUSTED)
    return _report(problem, limits, counter, witness)

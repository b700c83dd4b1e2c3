"""Plain and colored graph types plus the derived-graph operators.

Vertices are positional indices 0..n-1; human-readable labels ride along for
reporting.  Files and labels use 1-based numbering, code uses 0-based.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import MonochromaticEdge


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: symmetric, irreflexive edges over 0..n-1."""

    n: int
    edges: frozenset
    labels: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = frozenset(_norm_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"v{i + 1}" for i in range(self.n)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != self.n:
            raise ValueError("label count must equal vertex count")
        if len(set(self.labels)) != self.n:
            raise ValueError("labels must be unique within one graph")
        masks = [0] * self.n
        for u, v in edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "_adj", tuple(masks))

    # -- neighborhoods ------------------------------------------------

    def adjacency_masks(self) -> tuple:
        """Open-neighborhood bitmasks, one per vertex."""
        return self._adj

    def closed_masks(self) -> tuple:
        return tuple(m | (1 << v) for v, m in enumerate(self._adj))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def open_neighborhood(self, u: int) -> frozenset:
        return frozenset(v for v in range(self.n) if self._adj[u] >> v & 1)

    def closed_neighborhood(self, u: int) -> frozenset:
        return self.open_neighborhood(u) | {u}

    def degree(self, u: int) -> int:
        return bin(self._adj[u]).count("1")

    @property
    def m(self) -> int:
        return len(self.edges)

    def index_of_label(self, label: str) -> int:
        return self.labels.index(label)

    def relabeled(self, labels) -> "Graph":
        return Graph(self.n, self.edges, tuple(labels))


def complement(g: Graph) -> Graph:
    """Edge present iff absent in g, same vertex set and labels."""
    edges = frozenset((u, v) for u, v in combinations(range(g.n), 2)
                      if not g.has_edge(u, v))
    return Graph(g.n, edges, g.labels)


def bfs_distances(g: Graph, source: int) -> list:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency_masks()
    while queue:
        u = queue.popleft()
        m = adj[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def graph_power(g: Graph, d: int) -> Graph:
    """u,v adjacent in the result iff 1 <= dist_g(u,v) <= d."""
    if d < 1:
        raise ValueError("power must be >= 1")
    edges = set()
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            if 0 < dist[v] <= d:
                edges.add((u, v))
    return Graph(g.n, frozenset(edges), g.labels)


def connected_components(g: Graph) -> list:
    """Maximal connected vertex sets, sorted by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in range(g.n):
                if g._adj[u] >> v & 1 and not seen[v]:
                    seen[v] = True
                    stack.append(v)
        comps.append(frozenset(comp))
    return comps


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by the given vertex set; vertices kept in sorted order."""
    order = sorted(vertices)
    pos = {u: i for i, u in enumerate(order)}
    edges = frozenset((pos[u], pos[v]) for u, v in g.edges
                      if u in pos and v in pos)
    return Graph(len(order), edges, tuple(g.labels[u] for u in order))


@dataclass(frozen=True)
class ColoredGraph:
    """A properly colored graph in canonical order.

    Vertices are sorted so each color class is a contiguous index range, and
    edges are indexed so each color-pair class is contiguous.  Ranges are
    recorded 1-based (s > t denotes an empty class).
    """

    graph: Graph
    colors: tuple
    k: int
    edge_order: tuple          # r-th edge, endpoints (u, v) with color(u) < color(v)
    color_range: dict = field(compare=False)
    pair_range: dict = field(compare=False)
    vertex_perm: tuple = ()    # new index -> original index

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return len(self.edge_order)

    def color_of(self, u: int) -> int:
        return self.colors[u]

    def vertices_of_color(self, i: int) -> range:
        s, t = self.color_range[i]
        return range(s - 1, t)

    def edges_of_pair(self, i: int, j: int) -> range:
        s, t = self.pair_range[(i, j)]
        return range(s - 1, t)

    def pair_of_edge(self, r: int) -> tuple:
        u, v = self.edge_order[r]
        return (self.colors[u], self.colors[v])

    def pairs(self) -> list:
        return [(i, j) for i in range(1, self.k + 1)
                for j in range(i + 1, self.k + 1)]


def canonicalize_colored(g: Graph, colors, k: int | None = None) -> ColoredGraph:
    """Sort vertices by color and edges by color pair into contiguous ranges.

    Raises MonochromaticEdge if any edge joins two same-colored vertices.
    """
    colors = tuple(colors)
    if len(colors) != g.n:
        raise ValueError("need one color per vertex")
    if k is None:
        k = max(colors, default=0)
    if any(not (1 <= c <= k) for c in colors):
        raise ValueError(f"colors must lie in 1..{k}")
    for u, v in g.edges:
        if colors[u] == colors[v]:
            raise MonochromaticEdge(
                f"edge ({g.labels[u]},{g.labels[v]}) joins two color-{colors[u]} vertices")

    perm = sorted(range(g.n), key=lambda u: (colors[u], u))  # new -> old
    new_index = {old: new for new, old in enumerate(perm)}
    new_colors = tuple(colors[old] for old in perm)
    new_labels = tuple(g.labels[old] for old in perm)
    new_edges = frozenset(_norm_edge(new_index[u], new_index[v]) for u, v in g.edges)
    graph = Graph(g.n, new_edges, new_labels)

    color_range = {}
    pos = 1
    for i in range(1, k + 1):
        size = sum(1 for c in new_colors if c == i)
        color_range[i] = (pos, pos + size - 1)
        pos += size

    def pair_key(e):
        u, v = e
        cu, cv = new_colors[u], new_colors[v]
        if cu > cv:
            u, v, cu, cv = v, u, cv, cu
        return ((cu, cv), u, v)

    ordered = sorted(new_edges, key=pair_key)
    edge_order = []
    for u, v in ordered:
        if new_colors[u] > new_colors[v]:
            u, v = v, u
        edge_order.append((u, v))
    pair_range = {}
    pos = 1
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            size = sum(1 for u, v in edge_order
                       if new_colors[u] == i and new_colors[v] == j)
            pair_range[(i, j)] = (pos, pos + size - 1)
            pos += size

    return ColoredGraph(graph=graph, colors=new_colors, k=k,
                        edge_order=tuple(edge_order), color_range=color_range,
                        pair_range=pair_range, vertex_perm=tuple(perm))


@dataclass(frozen=True)
class RBInstance:
    """Bipartite red/blue instance with a coloring of the red side."""

    n_red: int
    n_blue: int
    k: int
    colors: tuple              # per red vertex, values 1..k
    edges: frozenset           # (red index, blue index), both 0-based

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        if len(self.colors) != self.n_red:
            raise ValueError("need one color per red vertex")
        if any(not (1 <= c <= self.k) for c in self.colors):
            raise ValueError(f"red colors must lie in 1..{self.k}")
        for r, b in self.edges:
            if not (0 <= r < self.n_red and 0 <= b < self.n_blue):
                raise ValueError(f"edge ({r},{b}) out of range")

    def reds_of_color(self, i: int) -> list:
        return [r for r in range(self.n_red) if self.colors[r] == i]

    def blue_neighbors(self, r: int) -> frozenset:
        return frozenset(b for (rr, b) in self.edges if rr == r)

    def red_neighbors(self, b: int) -> frozenset:
        return frozenset(r for (r, bb) in self.edges if bb == b)

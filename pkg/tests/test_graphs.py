import pytest
from hypothesis import given, settings, strategies as st

from migraphs.errors import MonochromaticEdge
from migraphs.graphs import (Graph, canonicalize_colored, complement,
                             connected_components, graph_power,
                             induced_subgraph)

from conftest import complete_graph, cycle_graph, path_graph


def small_graphs(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
        return Graph(n, frozenset(edges))
    return build()


def test_no_self_loops_or_duplicate_labels():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        Graph(2, frozenset(), ("a", "a"))


def test_complement_complete_is_empty():
    assert complement(complete_graph(3)).edges == frozenset()


def test_complement_involution_p4():
    p4 = path_graph(4)
    assert complement(complement(p4)) == p4


def test_c5_self_complementary_by_relabeling():
    c5 = cycle_graph(5)
    co = complement(c5)
    # v_i -> v_{2i mod 5} maps the cycle onto its complement
    mapped = frozenset(tuple(sorted((2 * u % 5, 2 * v % 5))) for u, v in c5.edges)
    assert mapped == co.edges


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g


def test_power_identity_and_diameter():
    p3 = path_graph(3)
    assert graph_power(p3, 1) == p3
    assert graph_power(p3, 2).edges == complete_graph(3).edges


def test_power_p5_distance_two():
    # distances along the path: pairs at distance <= 2 (1-based labels
    # 12,13,23,24,34,35,45)
    want = {(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)}
    assert graph_power(path_graph(5), 2).edges == frozenset(want)


@settings(max_examples=40, deadline=None)
@given(small_graphs(7), st.integers(1, 4))
def test_power_monotone_and_stabilizes(g, d):
    smaller = graph_power(g, d).edges
    larger = graph_power(g, d + 1).edges
    assert smaller <= larger
    stable = graph_power(g, max(g.n, 1)).edges
    # beyond the diameter the power equals the connectivity closure
    assert graph_power(g, g.n + 3).edges == stable


def test_neighborhood_relation():
    g = path_graph(4)
    for u in range(g.n):
        assert g.closed_neighborhood(u) == g.open_neighborhood(u) | {u}
        assert u in g.closed_neighborhood(u)


def test_components_and_induced():
    assert len(connected_components(path_graph(3))) == 1
    assert len(connected_components(Graph(2, frozenset()))) == 2
    sub = induced_subgraph(cycle_graph(5), {0, 1, 3})
    assert sub.n == 3
    assert sub.edges == frozenset({(0, 1)})
    assert sub.labels == ("v1", "v2", "v4")


def test_canonicalize_demo_instance(demo_colored):
    cg = demo_colored
    assert cg.color_range == {1: (1, 2), 2: (3, 3), 3: (4, 4)}
    assert cg.pair_range == {(1, 2): (1, 1), (1, 3): (2, 3), (2, 3): (4, 4)}
    assert cg.edge_order == ((0, 2), (0, 3), (1, 3), (2, 3))


def test_canonicalize_single_vertex():
    cg = canonicalize_colored(Graph(1, frozenset()), (1,))
    assert cg.color_range == {1: (1, 1)}
    assert cg.pair_range == {}


def test_canonicalize_sorted_input_is_identity():
    g = Graph(3, frozenset({(0, 1), (1, 2)}))
    cg = canonicalize_colored(g, (1, 2, 3))
    assert cg.vertex_perm == (0, 1, 2)
    assert cg.graph == g


def test_canonicalize_rejects_monochromatic_edge():
    with pytest.raises(MonochromaticEdge):
        canonicalize_colored(Graph(2, frozenset({(0, 1)})), (1, 1))


@settings(max_examples=40, deadline=None)
@given(small_graphs(7), st.data())
def test_canonicalize_preserves_degrees_and_edges(g, data):
    colors = []
    for u in range(g.n):
        neighbors = g.open_neighborhood(u)
        used = {colors[v] for v in neighbors if v < u}
        free = [c for c in range(1, g.n + 1) if c not in used]
        colors.append(data.draw(st.sampled_from(free)))
    if g.n == 0:
        return
    cg = canonicalize_colored(g, colors, k=g.n)
    assert sorted(cg.graph.degree(u) for u in range(g.n)) == \
        sorted(g.degree(u) for u in range(g.n))
    assert len(cg.graph.edges) == len(g.edges)

import pytest

from migraphs.graphs import Graph, canonicalize_colored


def path_graph(n):
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def complete_graph(n):
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(leaves):
    return Graph(leaves + 1, frozenset((0, i) for i in range(1, leaves + 1)))


@pytest.fixture
def demo_colored():
    """4 vertices, 4 edges, 3 colors; v1 v3 v4 form the colorful triangle."""
    g = Graph(4, frozenset({(0, 2), (0, 3), (1, 3), (2, 3)}))
    return canonicalize_colored(g, (1, 1, 2, 3))


@pytest.fixture
def demo_colored_minus(request):
    """Same instance with one edge deleted (parametrize with the edge)."""
    def remove(edge):
        edges = {(0, 2), (0, 3), (1, 3), (2, 3)} - {edge}
        return canonicalize_colored(Graph(4, frozenset(edges)), (1, 1, 2, 3))
    return remove

"""Reduction bundles: a built target instance plus its declarative contract."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import LabelMismatch, WrongBundleKind
from ..graphs import Graph
from ..intervals import IntervalFamily, layout_matches


@dataclass(frozen=True)
class ReductionBundle:
    """Target instance (interval family or plain graph), parameters, the
    rule-derived adjacency its geometry must realize, and the source digest."""

    name: str
    target: object                 # IntervalFamily or Graph
    params: dict
    expected_adjacency: Graph
    source_digest: str

    @property
    def is_family(self) -> bool:
        return isinstance(self.target, IntervalFamily)

    def realized_graph(self) -> Graph:
        from ..intervals import build_intersection_graph
        if self.is_family:
            return build_intersection_graph(self.target)
        return self.target


def make_bundle(name, target, params, expected, source_digest) -> ReductionBundle:
    """Construct a bundle, checking the geometry against the expected adjacency."""
    if isinstance(target, IntervalFamily):
        if not layout_matches(target, expected):
            realized = ReductionBundle(name, target, params, expected,
                                       source_digest).realized_graph()
            extra = sorted(realized.edges - expected.edges)[:5]
            missing = sorted(expected.edges - realized.edges)[:5]
            labels = expected.labels
            raise AssertionError(
                f"{name}: geometry does not realize the expected adjacency; "
                f"extra={[(labels[a], labels[b]) for a, b in extra]} "
                f"missing={[(labels[a], labels[b]) for a, b in missing]}")
    else:
        if target.labels != expected.labels or target.edges != expected.edges:
            raise AssertionError(f"{name}: constructed graph deviates from rules")
    return ReductionBundle(name, target, dict(params), expected, source_digest)


def require_bundle(bundle: ReductionBundle, name: str):
    if bundle.name != name:
        raise WrongBundleKind(f"expected a {name} bundle, got {bundle.name}")


def colored_digest(cg) -> str:
    edges = ",".join(f"({u + 1},{v + 1})" for u, v in cg.edge_order)
    cols = ",".join(str(c) for c in cg.colors)
    return f"colored[n={cg.n};k={cg.k};colors={cols};edges={edges}]"


def rb_digest(rb) -> str:
    edges = ",".join(f"({r + 1},{b + 1})" for r, b in sorted(rb.edges))
    cols = ",".join(str(c) for c in rb.colors)
    return f"rb[reds={rb.n_red};blues={rb.n_blue};k={rb.k};colors={cols};edges={edges}]"


def graph_digest(g: Graph) -> str:
    edges = ",".join(f"({u + 1},{v + 1})" for u, v in sorted(g.edges))
    return f"graph[n={g.n};edges={edges}]"

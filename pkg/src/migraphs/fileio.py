"""JSON-shaped file formats with round-trip guarantees.

Graph files: {"n", "edges": [[u,v]...], "colors"?, "labels"?} (1-based).
Family files: {"kind", "t", "unit", "balanced", "unit_length": [num,den]|null,
"members": [{"label", "parts": [{"track", "lo": [n,d], "hi": [n,d]}]}]}.
Bundle files add {"name", "params", "expected_edges", "source_digest"} around
a family (or a graph for the gadget-graph reduction).  Red/blue instance
files: {"reds", "blues", "k", "colors", "edges": [[red,blue]...]} (1-based).
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .graphs import ColoredGraph, Graph, RBInstance, canonicalize_colored
from .intervals import Interval, IntervalFamily, MultiInterval
from .reductions.bundle import ReductionBundle


def _dump(path, payload):
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    Path(path).write_text(text)


def _load(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(str(path), str(exc))


def _rational(value, path, where):
    if not (isinstance(value, list) and len(value) == 2
            and all(isinstance(x, int) for x in value)):
        raise ParseError(path, f"{where}: expected [numerator, denominator]")
    num, den = value
    if den <= 0:
        raise ParseError(path, f"{where}: denominator must be positive")
    return Fraction(num, den)


# -- graphs ------------------------------------------------------------

def graph_payload(g: Graph, colors=None) -> dict:
    payload = {"n": g.n,
               "edges": [[u + 1, v + 1] for u, v in sorted(g.edges)],
               "labels": list(g.labels)}
    if colors is not None:
        payload["colors"] = list(colors)
    return payload


def write_graph(path, g: Graph, colors=None):
    _dump(path, graph_payload(g, colors))


def graph_from_payload(data, path="<memory>"):
    if "n" not in data or "edges" not in data:
        raise ParseError(path, "graph file needs 'n' and 'edges'")
    n = data["n"]
    edges = set()
    for e in data["edges"]:
        if not (isinstance(e, list) and len(e) == 2):
            raise ParseError(path, f"bad edge entry {e!r}")
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(path, f"edge {e!r} out of range 1..{n}")
        edges.add((u - 1, v - 1))
    labels = tuple(data.get("labels") or ())
    try:
        g = Graph(n, frozenset(edges), labels)
    except ValueError as exc:
        raise ParseError(path, str(exc))
    return g, data.get("colors")


def read_graph(path):
    """Returns (Graph, colors-or-None)."""
    return graph_from_payload(_load(path), str(path))


def read_colored_graph(path) -> ColoredGraph:
    g, colors = read_graph(path)
    if colors is None:
        raise ParseError(str(path), "expected a 'colors' array")
    return canonicalize_colored(g, colors)


# -- red/blue instances --------------------------------------------------

def write_rb(path, rb: RBInstance):
    _dump(path, {"reds": rb.n_red, "blues": rb.n_blue, "k": rb.k,
                 "colors": list(rb.colors),
                 "edges": [[r + 1, b + 1] for r, b in sorted(rb.edges)]})


def read_rb(path) -> RBInstance:
    data = _load(path)
    for key in ("reds", "blues", "k", "colors", "edges"):
        if key not in data:
            raise ParseError(str(path), f"red/blue file needs '{key}'")
    try:
        return RBInstance(data["reds"], data["blues"], data["k"],
                          tuple(data["colors"]),
                          frozenset((r - 1, b - 1) for r, b in data["edges"]))
    except (ValueError, TypeError) as exc:
        raise ParseError(str(path), str(exc))


# -- families ------------------------------------------------------------

def family_payload(f: IntervalFamily) -> dict:
    return {
        "kind": f.kind, "t": f.t, "unit": f.unit, "balanced": f.balanced,
        "unit_length": ([f.unit_length.numerator, f.unit_length.denominator]
                        if f.unit_length is not None else None),
        "members": [
            {"label": m.label,
             "parts": [{"track": p.track,
                        "lo": [p.lo.numerator, p.lo.denominator],
                        "hi": [p.hi.numerator, p.hi.denominator]}
                       for p in m.parts]}
            for m in f.members],
    }


def write_family(path, f: IntervalFamily):
    _dump(path, family_payload(f))


def family_from_payload(data, path="<memory>") -> IntervalFamily:
    for key in ("kind", "t", "members"):
        if key not in data:
            raise ParseError(path, f"family file needs '{key}'")
    members = []
    for m in data["members"]:
        label = m.get("label")
        if not label:
            raise ParseError(path, "member without a label")
        parts = []
        for p in m.get("parts", []):
            lo = _rational(p["lo"], path, f"member {label}")
            hi = _rational(p["hi"], path, f"member {label}")
            try:
                parts.append(Interval(p.get("track", 0), lo, hi))
            except ValueError as exc:
                raise ParseError(path, f"member {label}: {exc}")
        members.append(MultiInterval(label, tuple(parts)))
    unit_length = data.get("unit_length")
    if unit_length is not None:
        unit_length = _rational(unit_length, path, "unit_length")
    return IntervalFamily(kind=data["kind"], t=data["t"],
                          members=tuple(members),
                          unit=bool(data.get("unit", False)),
                          balanced=bool(data.get("balanced", False)),
                          unit_length=unit_length)


def read_family(path) -> IntervalFamily:
    return family_from_payload(_load(path), str(path))


# -- bundles ---------------------------------------------------------------

def write_bundle(path, bundle: ReductionBundle):
    expected = bundle.expected_adjacency
    payload = {
        "name": bundle.name,
        "params": {k: v for k, v in sorted(bundle.params.items())},
        "source_digest": bundle.source_digest,
        "expected_edges": [[expected.labels[u], expected.labels[v]]
                           for u, v in sorted(expected.edges)],
    }
    if bundle.is_family:
        payload["family"] = family_payload(bundle.target)
        payload["member_labels"] = list(expected.labels)
    else:
        payload["graph"] = graph_payload(bundle.target)
    _dump(path, payload)


def read_bundle(path) -> ReductionBundle:
    data = _load(path)
    for key in ("name", "params", "expected_edges", "source_digest"):
        if key not in data:
            raise ParseError(str(path), f"bundle file needs '{key}'")
    if "family" in data:
        target = family_from_payload(data["family"], str(path))
        labels = tuple(data.get("member_labels") or target.labels())
    elif "graph" in data:
        target, _ = graph_from_payload(data["graph"], str(path))
        labels = target.labels
    else:
        raise ParseError(str(path), "bundle file needs 'family' or 'graph'")
    index = {lab: i for i, lab in enumerate(labels)}
    try:
        edges = frozenset(tuple(sorted((index[a], index[b])))
                          for a, b in data["expected_edges"])
    except KeyError as exc:
        raise ParseError(str(path), f"expected edge names unknown label {exc}")
    expected = Graph(len(labels), edges, labels)
    params = {}
    for k, v in data["params"].items():
        params[k] = v
    return ReductionBundle(name=data["name"], target=target, params=params,
                           expected_adjacency=expected,
                           source_digest=data["source_digest"])


def sniff_instance(path):
    """Classify a file as graph / family / bundle / rb by its keys."""
    data = _load(path)
    if "members" in data:
        return "family", family_from_payload(data, str(path))
    if "reds" in data:
        return "rb", read_rb(path)
    if "family" in data or ("expected_edges" in data and "graph" in data):
        return "bundle", read_bundle(path)
    if "n" in data:
        return "graph", graph_from_payload(data, str(path))
    raise ParseError(str(path), "unrecognized file shape")

"""The lemma-verification harness.

Each registered reduction gets: a hard-coded anchored instance, a seeded
trial generator mixing planted yes/no/random sources, the source and target
oracles, and structural checks (layout, representation class, member-count
formulas).  A suite passes iff every trial agrees, every structural check
holds, and no oracle was exhausted.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .errors import MigraphsError
from .graphs import Graph, complement
from .generators import (GenSpec, gen_colored_graph, gen_nonempty_pairs_colored,
                         gen_plain_graph, gen_rb_instance,
                         worked_example_colored, worked_example_rb)
from .intervals import layout_matches, validate_family, T_INTERVAL, T_TRACK
from .reductions import (check_selection_properties,
                         derive_cutting_params, domset_variant_checks,
                         reduce_cliquepartition_unit2interval,
                         reduce_dist_domset_co3interval,
                         reduce_dist_domset_unit2track,
                         reduce_dist_perfectcode_unit2track,
                         reduce_domset_co3track, reduce_irredundant,
                         reduce_perfectcode_unit2track,
                         reduce_sep_balanced2track, reduce_sep_cobal3track)
from .reductions import domination as _dom
from .reductions import perfect_code as _pc
from .reductions import distance_perfect_code as _dpc
from .reductions import clique_partition as _cp
from .reductions import irredundant as _irr
from .solvers import (SolveReport, is_clique, is_connected_subset,
                      solve_clique, solve_clique_partition,
                      solve_cut_components, solve_cut_connected,
                      solve_distance_domset, solve_distance_perfect_code,
                      solve_domset, solve_irredundant,
                      solve_multicolored_clique, solve_perfect_code,
                      solve_rb_domset, solve_separating)


@dataclass
class TrialRecord:
    index: int
    seed: int
    kind: str
    source_digest: str
    source_answer: str
    target_answer: str
    agree: bool
    checks: list                    # (check name, ok, note)
    source_nodes: int
    target_nodes: int
    seconds: float = field(default=0.0, compare=False)

    @property
    def structural_ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def ok(self) -> bool:
        return self.agree and self.structural_ok


@dataclass
class VerifyReport:
    name: str
    trials: list
    anchored_family: object = field(default=None, compare=False, repr=False)

    @property
    def passed(self) -> bool:
        return all(t.ok for t in self.trials)

    def summary(self) -> str:
        good = sum(1 for t in self.trials if t.ok)
        return (f"{self.name}: {good}/{len(self.trials)} trials ok "
                f"({'PASS' if self.passed else 'FAIL'})")


def report_csv(report: VerifyReport) -> str:
    """Delimited per-trial rows; deterministic (node counts, not wall time)."""
    lines = ["index,seed,kind,source_answer,target_answer,agree,"
             "structural_ok,source_nodes,target_nodes,checks,source_digest"]
    for t in report.trials:
        checks = ";".join(f"{name}={'ok' if ok else 'FAIL'}"
                          for name, ok, _ in t.checks)
        digest = t.source_digest.replace(",", " ")
        lines.append(f"{t.index},{t.seed},{t.kind},{t.source_answer},"
                     f"{t.target_answer},{int(t.agree)},{int(t.structural_ok)},"
                     f"{t.source_nodes},{t.target_nodes},{checks},{digest}")
    return "\n".join(lines) + "\n"


def _choose2(k: int) -> int:
    return k * (k - 1) // 2


def _rep_check(bundle, kind, t, unit, balanced):
    """Representation-class conformance of the target family."""
    fam = bundle.target
    rep = validate_family(fam)
    notes = []
    ok = rep.ok and fam.kind == kind and fam.t == t
    if not rep.ok:
        notes.append(str(rep.violations[:3]))
    if unit and not fam.unit:
        ok = False
        notes.append("unit flag missing")
    if balanced and not fam.balanced:
        ok = False
        notes.append("balanced flag missing")
    return ("representation", ok, ";".join(notes))


def _layout_check(bundle):
    try:
        ok = layout_matches(bundle.target, bundle.expected_adjacency)
    except MigraphsError as exc:
        return ("layout", False, str(exc))
    return ("layout", ok, "")


_MODES = ("yes", "no", "random")


class Suite:
    def __init__(self, name, anchored, gen, build, source_solve, target_solve,
                 structural):
        self.name = name
        self.anchored = anchored
        self.gen = gen
        self.build = build
        self.source_solve = source_solve
        self.target_solve = target_solve
        self.structural = structural


def _colored_gen(k_choices, n_extra, p, nonempty_pairs=False, no_k_cap=None):
    def gen(seed, mode):
        rng = random.Random(seed)
        k = rng.choice(k_choices)
        if no_k_cap and mode in ("no", "random"):
            k = min(k, no_k_cap)
        if mode == "no":
            # a k=2 no-instance has no cross edge at all, so keeping every
            # pair class nonempty forces k >= 3 here
            k = max(k, 3 if nonempty_pairs else 2)
        n = k + rng.randrange(n_extra + 1)
        if mode == "no":
            n = max(n, k + (2 if nonempty_pairs else 1))
        spec = GenSpec(n, k, p, mode, seed)
        if nonempty_pairs:
            return gen_nonempty_pairs_colored(spec)
        return gen_colored_graph(spec)
    return gen


def _rb_gen(seed, mode):
    rng = random.Random(seed)
    k = rng.choice((2, 2, 3))
    n_red = k + rng.randrange(3)
    n_blue = 1 + rng.randrange(3)
    return gen_rb_instance(n_red, k, n_blue, 0.4, mode, seed)


def _plain_gen_for(k):
    def gen(seed, mode, min_extra):
        rng = random.Random(seed)
        n = min_extra + rng.randrange(3)
        if mode == "yes":
            return gen_plain_graph(n, 0.25, seed, planted_clique=k)
        if mode == "no":
            return gen_plain_graph(n, 0.25, seed, forbid_clique=k)
        return gen_plain_graph(n, 0.25, seed)
    return gen


def _counts_check(name, got, want):
    return (name, got == want, f"{got} != {want}" if got != want else "")


def _suite_domset():
    def structural(bundle, cg):
        checks = [_layout_check(bundle),
                  _rep_check(bundle, T_TRACK, 3, False, False),
                  _counts_check("member_count", len(bundle.target.members),
                                _dom.expected_member_count(cg))]
        props = check_selection_properties(bundle)
        checks.append(("five_properties", all(props), str(props)))
        # the plain witness always has a pairwise-disjoint (complement-clique)
        # companion of the same size
        co = complement(bundle.realized_graph())
        kp = bundle.params["k_prime"]
        plain = solve_domset(co, kp)
        restricted = solve_domset(co, kp, variant="clique")
        bonus_ok = plain.status == restricted.status
        note = f"plain={plain.status},clique={restricted.status}"
        if restricted.status == "feasible":
            w = restricted.witness
            bonus_ok = bonus_ok and is_clique(co, w) and is_connected_subset(co, w)
        checks.append(("clique_connected_companion", bonus_ok, note))
        return checks

    return Suite(
        "domset_co3track",
        worked_example_colored,
        _colored_gen((2, 3, 3), 3, 0.5, nonempty_pairs=True),
        reduce_domset_co3track,
        solve_multicolored_clique,
        lambda b: solve_domset(complement(b.realized_graph()),
                               b.params["k_prime"]),
        structural)


def _suite_dist_domset_track(d):
    def structural(bundle, rb):
        want = d * rb.k + max(d - 2, 0) * rb.n_blue
        got = sum(1 for lab in bundle.target.labels() if lab.startswith("DUM("))
        return [_layout_check(bundle),
                _rep_check(bundle, T_TRACK, 2, True, False),
                _counts_check("dummy_count", got, want)]

    return Suite(
        f"dist_domset_unit2track_d{d}",
        worked_example_rb,
        _rb_gen,
        lambda rb: reduce_dist_domset_unit2track(rb, d),
        solve_rb_domset,
        lambda b: solve_distance_domset(b.realized_graph(), b.params["k"], d),
        structural)


def _suite_dist_domset_co3():
    def structural(bundle, rb):
        return [_layout_check(bundle),
                _rep_check(bundle, T_INTERVAL, 3, False, False),
                _counts_check("dummy_count",
                              sum(1 for lab in bundle.target.labels()
                                  if lab.startswith("DUM(")), 2 * rb.k)]

    return Suite(
        "dist_domset_co3interval",
        worked_example_rb,
        _rb_gen,
        reduce_dist_domset_co3interval,
        solve_rb_domset,
        lambda b: solve_distance_domset(complement(b.realized_graph()),
                                        b.params["k"], 2),
        structural)


def _suite_perfectcode():
    def structural(bundle, cg):
        return [_layout_check(bundle),
                _rep_check(bundle, T_TRACK, 2, True, False),
                _counts_check("dummy_count", _pc.dummy_count(bundle),
                              _pc.expected_dummy_count(cg))]

    return Suite(
        "perfectcode_unit2track",
        worked_example_colored,
        _colored_gen((2, 3, 3), 2, 0.5),
        reduce_perfectcode_unit2track,
        solve_multicolored_clique,
        lambda b: solve_perfect_code(b.realized_graph(), b.params["k_prime"],
                                     exact_size=True),
        structural)


def _suite_dist_perfectcode(d):
    def structural(bundle, cg):
        return [_layout_check(bundle),
                _rep_check(bundle, T_TRACK, 2, True, False),
                _counts_check("dummy_count", _dpc.dummy_count(bundle),
                              _dpc.expected_dummy_count(cg, d))]

    return Suite(
        f"dist_perfectcode_unit2track_d{d}",
        worked_example_colored,
        _colored_gen((2, 3, 3), 2, 0.5),
        lambda cg: reduce_dist_perfectcode_unit2track(cg, d),
        solve_multicolored_clique,
        lambda b: solve_distance_perfect_code(b.realized_graph(),
                                              b.params["k_prime"], d,
                                              exact_size=True),
        structural)


def _suite_cliquepartition():
    def structural(bundle, cg):
        return [_layout_check(bundle),
                _rep_check(bundle, T_INTERVAL, 2, True, False),
                _counts_check("member_count", len(bundle.target.members),
                              _cp.expected_member_count(cg))]

    return Suite(
        "cliquepartition_unit2interval",
        worked_example_colored,
        _colored_gen((2, 2, 3), 2, 0.6, nonempty_pairs=True),
        reduce_cliquepartition_unit2interval,
        solve_multicolored_clique,
        lambda b: solve_clique_partition(b.realized_graph(),
                                         b.params["k_prime"]),
        structural)


def _suite_irredundant():
    def structural(bundle, cg):
        graph_ok = bundle.target.edges == bundle.expected_adjacency.edges
        return [("rule_agreement", graph_ok, ""),
                _counts_check("vertex_count", bundle.target.n,
                              _irr.expected_vertex_count(cg))]

    # exhaustive no-case verification is exponential in k', so non-planted
    # and planted-no trials stay at k = 2 with few edges; empty pair classes
    # are fine here (they only shrink the reachable irredundance)
    return Suite(
        "irredundant",
        worked_example_colored,
        _colored_gen((2, 3), 2, 0.4, no_k_cap=2),
        reduce_irredundant,
        solve_multicolored_clique,
        lambda b: solve_irredundant(complement(b.target),
                                    b.params["k_prime"], exact_size=True),
        structural)


def _sep_gen(kind):
    def gen(seed, mode):
        rng = random.Random(seed)
        k = rng.choice((2, 3))
        bound = k + (2 if kind == "balanced2track" else 1) * _choose2(k)
        base = _plain_gen_for(k)
        g = base(seed, mode, bound + 1)
        return (g, k)
    return gen


def _sep_anchored(kind):
    def anchored():
        k4 = frozenset({(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)})
        n = 10 if kind == "balanced2track" else 8
        return (Graph(n, k4), 3)
    return anchored


def _suite_sep(kind):
    name = f"sep_{kind}"
    build = (lambda src: reduce_sep_balanced2track(*src)) \
        if kind == "balanced2track" else \
        (lambda src: reduce_sep_cobal3track(*src))

    def target(bundle):
        g = bundle.realized_graph()
        if kind == "cobal3track":
            g = complement(g)
        return solve_separating(g, bundle.params["k_prime"],
                                bundle.params["l_prime"])

    def structural(bundle, src):
        g, k = src
        checks = [_layout_check(bundle),
                  _rep_check(bundle,
                             T_TRACK, 2 if kind == "balanced2track" else 3,
                             False, True)]
        if kind == "balanced2track":
            checks.append(_counts_check("member_count",
                                        len(bundle.target.members),
                                        g.n + 2 * g.m))
        else:
            checks.append(_counts_check("member_count",
                                        len(bundle.target.members),
                                        g.n + g.m))
        return checks

    return Suite(name, _sep_anchored(kind), _sep_gen(kind), build,
                 lambda src: solve_clique(src[0], src[1]), target, structural)


def _suite_cut(kind, variant):
    base = _suite_sep(kind)
    solver = solve_cut_connected if variant == "cut_connected" \
        else solve_cut_components

    def target(bundle):
        g = bundle.realized_graph()
        if kind == "cobal3track":
            g = complement(g)
        p = derive_cutting_params(bundle, variant)
        return solver(g, p["k"], p["l"])

    return Suite(f"{variant}_{kind}", base.anchored, base.gen, base.build,
                 base.source_solve, target, base.structural)


def _registry():
    suites = [
        _suite_domset(),
        _suite_dist_domset_track(2),
        _suite_dist_domset_track(3),
        _suite_dist_domset_co3(),
        _suite_perfectcode(),
        _suite_dist_perfectcode(2),
        _suite_dist_perfectcode(3),
        _suite_cliquepartition(),
        _suite_irredundant(),
        _suite_sep("balanced2track"),
        _suite_sep("cobal3track"),
        _suite_cut("balanced2track", "cut_connected"),
        _suite_cut("cobal3track", "cut_connected"),
        _suite_cut("balanced2track", "cut_components"),
        _suite_cut("cobal3track", "cut_components"),
    ]
    return {s.name: s for s in suites}


REGISTRY = _registry()
LEMMA_SUITES = tuple(REGISTRY)


def _digest_of(instance) -> str:
    from .reductions.bundle import colored_digest, graph_digest, rb_digest
    from .graphs import ColoredGraph, RBInstance
    if isinstance(instance, ColoredGraph):
        return colored_digest(instance)
    if isinstance(instance, RBInstance):
        return rb_digest(instance)
    if isinstance(instance, tuple):
        g, k = instance
        return graph_digest(g) + f";k={k}"
    return graph_digest(instance)


def verify_reduction(name: str, trials: int, seed: int) -> VerifyReport:
    """Run the iff harness: trial 0 is the anchored instance, later trials
    cycle planted yes/no/random sources derived from the base seed."""
    if name not in REGISTRY:
        raise KeyError(f"unknown reduction {name!r}; known: {sorted(REGISTRY)}")
    suite = REGISTRY[name]
    records = []
    anchored_family = None
    for t in range(trials):
        t0 = time.perf_counter()
        if t == 0:
            kind, trial_seed = "anchored", seed
            instance = suite.anchored()
        else:
            kind = _MODES[(t - 1) % len(_MODES)]
            trial_seed = seed * 100003 + t
            instance = suite.gen(trial_seed, kind)
        bundle = suite.build(instance)
        if t == 0 and bundle.is_family:
            anchored_family = bundle.target
        src = suite.source_solve(instance)
        tgt = suite.target_solve(bundle)
        checks = suite.structural(bundle, instance)
        records.append(TrialRecord(
            index=t, seed=trial_seed, kind=kind,
            source_digest=bundle.source_digest,
            source_answer=src.status, target_answer=tgt.status,
            agree=(src.status in ("feasible", "infeasible")
                   and src.status == tgt.status),
            checks=checks,
            source_nodes=src.nodes_explored, target_nodes=tgt.nodes_explored,
            seconds=time.perf_counter() - t0))
    return VerifyReport(name=name, trials=records,
                        anchored_family=anchored_family)

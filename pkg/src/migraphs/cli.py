"""Command-line shell: gen / reduce / solve / verify / render."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import MigraphsError
from .graphs import complement
from .generators import GenSpec, gen_colored_graph, gen_rb_instance
from .harness import REGISTRY, report_csv, verify_reduction
from .render import render_family, write_report_figures
from . import fileio, solvers
from .reductions import (reduce_cliquepartition_unit2interval,
                         reduce_dist_domset_co3interval,
                         reduce_dist_domset_unit2track,
                         reduce_dist_perfectcode_unit2track,
                         reduce_domset_co3track, reduce_irredundant,
                         reduce_perfectcode_unit2track,
                         reduce_sep_balanced2track, reduce_sep_cobal3track)

_REDUCERS = {
    "domset_co3track": ("colored", lambda src, a: reduce_domset_co3track(src)),
    "dist_domset_unit2track": (
        "rb", lambda src, a: reduce_dist_domset_unit2track(src, a.d or 2)),
    "dist_domset_co3interval": (
        "rb", lambda src, a: reduce_dist_domset_co3interval(src)),
    "perfectcode_unit2track": (
        "colored", lambda src, a: reduce_perfectcode_unit2track(src)),
    "dist_perfectcode_unit2track": (
        "colored", lambda src, a: reduce_dist_perfectcode_unit2track(src, a.d or 2)),
    "cliquepartition_unit2interval": (
        "colored", lambda src, a: reduce_cliquepartition_unit2interval(src)),
    "sep_balanced2track": (
        "plain", lambda src, a: reduce_sep_balanced2track(src, _need_k(a))),
    "sep_cobal3track": (
        "plain", lambda src, a: reduce_sep_cobal3track(src, _need_k(a))),
    "irredundant": ("colored", lambda src, a: reduce_irredundant(src)),
}


def _need_k(args):
    if args.k is None:
        raise MigraphsError("this reduction needs --k")
    return args.k


def _parser():
    parser = argparse.ArgumentParser(
        prog="migraphs",
        description="multiple-interval graph reductions, exact solvers, and "
                    "the iff-verification harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a source instance")
    p.add_argument("what", choices=["colored", "rb"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--blues", type=int, default=3)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--planted", choices=["yes", "no", "random"],
                   default="random")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("reduce", help="build a reduction bundle")
    p.add_argument("name", choices=sorted(_REDUCERS))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("solve", help="run an exact oracle")
    p.add_argument("problem", choices=[
        "clique", "multicolored_clique", "domset", "distance_domset",
        "perfect_code", "distance_perfect_code", "rb_domset",
        "clique_partition", "separating", "cut_connected", "cut_components",
        "irredundant"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--variant", default="plain",
                   choices=["plain", "connected", "independent", "clique"])
    p.add_argument("--exact", action="store_true")
    p.add_argument("--complement", action="store_true")

    p = sub.add_parser("verify", help="run the iff harness for one reduction")
    p.add_argument("name", choices=sorted(REGISTRY))
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--report", default=None)

    p = sub.add_parser("render", help="draw an interval family")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", choices=["ascii", "svg"], required=True)
    p.add_argument("--out", required=True)
    return parser


def _cmd_gen(args) -> int:
    if args.what == "colored":
        cg = gen_colored_graph(GenSpec(args.n, args.k, args.p, args.planted,
                                       args.seed))
        fileio.write_graph(args.out, cg.graph, colors=list(cg.colors))
    else:
        rb = gen_rb_instance(args.n, args.k, args.blues, args.p,
                             args.planted, args.seed)
        fileio.write_rb(args.out, rb)
    print(f"wrote {args.out}")
    return 0


def _cmd_reduce(args) -> int:
    kind, build = _REDUCERS[args.name]
    if kind == "colored":
        src = fileio.read_colored_graph(args.infile)
    elif kind == "rb":
        src = fileio.read_rb(args.infile)
    else:
        src, _ = fileio.read_graph(args.infile)
    bundle = build(src, args)
    fileio.write_bundle(args.out, bundle)
    size = (len(bundle.target.members) if bundle.is_family
            else bundle.target.n)
    print(f"wrote {args.out}: {bundle.name}, {size} members, "
          f"params {bundle.params.get('k_prime', bundle.params.get('k'))}")
    return 0


def _load_solve_input(args):
    kind, obj = fileio.sniff_instance(args.infile)
    if kind == "family":
        from .intervals import build_intersection_graph
        g = build_intersection_graph(obj)
    elif kind == "bundle":
        g = obj.realized_graph()
    elif kind == "graph":
        g, _ = obj
    else:
        raise MigraphsError(f"{args.problem} needs a graph or family input")
    if args.complement:
        g = complement(g)
    return g


def _cmd_solve(args) -> int:
    problem = args.problem
    if problem == "rb_domset":
        kind, rb = fileio.sniff_instance(args.infile)
        if kind != "rb":
            raise MigraphsError("rb_domset needs a red/blue instance file")
        rep = solvers.solve_rb_domset(rb, args.k)
    elif problem == "multicolored_clique":
        cg = fileio.read_colored_graph(args.infile)
        rep = solvers.solve_multicolored_clique(cg)
    else:
        g = _load_solve_input(args)
        if problem == "clique":
            rep = solvers.solve_clique(g, args.k)
        elif problem == "domset":
            rep = solvers.solve_domset(g, args.k, args.variant, args.exact)
        elif problem == "distance_domset":
            rep = solvers.solve_distance_domset(g, args.k, args.d or 2,
                                                args.variant, args.exact)
        elif problem == "perfect_code":
            # exact size is the defining convention for perfect codes here
            rep = solvers.solve_perfect_code(g, args.k, True)
        elif problem == "distance_perfect_code":
            rep = solvers.solve_distance_perfect_code(g, args.k, args.d or 2)
        elif problem == "clique_partition":
            rep = solvers.solve_clique_partition(g, args.k)
        elif problem == "separating":
            rep = solvers.solve_separating(g, args.k, _need_l(args))
        elif problem == "cut_connected":
            rep = solvers.solve_cut_connected(g, args.k, _need_l(args))
        elif problem == "cut_components":
            rep = solvers.solve_cut_components(g, args.k, _need_l(args))
        elif problem == "irredundant":
            rep = solvers.solve_irredundant(g, args.k, True)
        else:  # pragma: no cover
            raise MigraphsError(f"unhandled problem {problem}")
    print(f"{problem}: {rep.status} (nodes={rep.nodes_explored})")
    if rep.status == "feasible" and rep.witness is not None:
        print(f"witness: {_format_witness(rep.witness)}")
    return 0 if rep.status != "exhausted" else 1


def _need_l(args):
    if args.l is None:
        raise MigraphsError("this problem needs --l")
    return args.l


def _format_witness(witness):
    if isinstance(witness, (frozenset, set)):
        return "{" + ", ".join(str(u + 1) for u in sorted(witness)) + "}"
    if isinstance(witness, tuple):
        return " | ".join("{" + ", ".join(str(u + 1) for u in sorted(part))
                          + "}" for part in witness)
    return str(witness)


def _cmd_verify(args) -> int:
    report = verify_reduction(args.name, args.trials, args.seed)
    for t in report.trials:
        mark = "ok " if t.ok else "FAIL"
        print(f"  trial {t.index:3d} [{t.kind:8s}] source={t.source_answer:10s} "
              f"target={t.target_answer:10s} {mark} ({t.seconds:.2f}s)")
    print(report.summary())
    if args.report:
        Path(args.report).write_text(report_csv(report))
        figures = write_report_figures(report, str(Path(args.report).with_suffix("")))
        print(f"report: {args.report}")
        for f in figures:
            print(f"figure: {f}")
    return 0 if report.passed else 1


def _cmd_render(args) -> int:
    family = fileio.read_family(args.infile)
    Path(args.out).write_text(render_family(family, args.format))
    print(f"wrote {args.out}")
    return 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "render":
            return _cmd_render(args)
    except MigraphsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

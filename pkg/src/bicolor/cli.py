"""Command line entry point: ``bicolor <command> ...``.

Exit codes: 0 success/pass, 1 predicate failed, 2 input error,
3 resource guard (too many matchings, search budget exceeded).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import catalog
from .fidelity import (
    LITERAL,
    UndefinedFidelity,
    general_fidelity,
    k_monochromatic_fidelity,
    k_monochromatic_violations,
    monochromatic_fidelity,
    monochromatic_violations,
    target_violations,
)
from .graph import DEFAULT_TOL, BiColoredGraph, default_palette
from .io import (
    PRECISION,
    ParseError,
    dumps_graph,
    fidelity_report,
    fidelity_to_dict,
    fmt,
    fmt_complex,
    read_graph,
    read_target_document,
    state_report,
    target_from_document,
    to_dot,
)
from .matching import DEFAULT_MAX_MATCHINGS, MatchingExplosion
from .optimizer import (
    BudgetExceeded,
    CompiledTopology,
    Objective,
    OptimizeConfig,
    SearchBudget,
    optimize_weights,
    search_topologies,
)
from .state import compute_state

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _resolve(name: str) -> Path:
    """A file path, or else the name of a bundled catalog entry."""
    p = Path(name)
    if p.exists():
        return p
    try:
        return catalog.path(name)
    except FileNotFoundError:
        raise InputError(f"{name}: no such file or catalog entry") from None


def _load_graph(name: str) -> BiColoredGraph:
    p = _resolve(name)
    try:
        return read_graph(p)
    except ParseError as exc:
        raise InputError(f"{name}: {exc}") from None


def _color(palette, label: str) -> int:
    if label in palette:
        return list(palette).index(label)
    raise InputError(f"unknown color label {label!r} (palette {','.join(palette)})")


def _objective(args, palette, n: int) -> Objective:
    constraint = getattr(args, "constraint", "complex")
    if args.kmono is not None:
        k = int(args.kmono[0])
        red = _color(palette, args.kmono[1]) if len(args.kmono) > 1 else 0
        if not 1 <= k <= n:
            raise InputError(f"k must be in 1..{n}, got {k}")
        return Objective("k_mono", constraint, k=k, red=red)
    if args.general is not None:
        doc = read_target_document(_resolve(args.general))
        if doc.get("palette") and list(doc["palette"]) != list(palette):
            raise InputError(f"target palette {doc['palette']} differs from graph palette {list(palette)}")
        if args.mode:
            doc = dict(doc, mode=args.mode)
        target = target_from_document(doc, palette)
        if target.n != n:
            raise InputError(f"target colorings have length {target.n}, graph has n={n}")
        return Objective("general", constraint, target=target)
    return Objective("mono", constraint)


def cmd_state(args) -> int:
    graph = _load_graph(args.graph)
    state = compute_state(graph, args.tol, args.max_matchings)
    print(state_report(state, args.precision))
    if state.degenerate:
        print("warning: no surviving colorings (N = 0); fidelities are undefined", file=sys.stderr)
    return EXIT_OK


def cmd_fidelity(args) -> int:
    graph = _load_graph(args.graph)
    obj = _objective(args, graph.palette, graph.n)
    state = compute_state(graph, args.tol, args.max_matchings)
    try:
        if obj.kind == "mono":
            report = monochromatic_fidelity(state)
        elif obj.kind == "k_mono":
            report = k_monochromatic_fidelity(state, obj.k, obj.red)
        else:
            report = general_fidelity(state, obj.target)
    except UndefinedFidelity as exc:
        print(f"error: fidelity undefined: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        print(json.dumps(fidelity_to_dict(report, graph.palette)))
    else:
        print(fidelity_report(report, graph.palette, args.precision))
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = _load_graph(args.graph)
    obj = _objective(args, graph.palette, graph.n)
    state = compute_state(graph, args.tol, args.max_matchings)
    if obj.kind == "mono":
        bad = monochromatic_violations(state, args.tol)
        what = "monochromatic"
    elif obj.kind == "k_mono":
        bad = k_monochromatic_violations(state, obj.k, obj.red, args.tol)
        what = f"{obj.k}-monochromatic (red {graph.palette[obj.red]})"
    else:
        bad = target_violations(state, obj.target, args.tol)
        what = "target"
    print(f"verify {what}: {'pass' if not bad else 'fail'}  "
          f"(tolerance {fmt(args.tol, args.precision)}, {len(state.matchings)} matchings)")
    for c, got, want in bad:
        print(f"  {state.label(c)}  got {fmt_complex(got, args.precision)}  "
              f"want {fmt_complex(complex(want), args.precision)}")
    return EXIT_OK if not bad else EXIT_FAIL


def _print_result(result, precision: int, index: int | None = None):
    tag = "" if index is None else f"[{index}] "
    print(f"{tag}fidelity {fmt(result.fidelity, precision)}  exact {'yes' if result.exact else 'no'}"
          f"  snapped {'yes' if result.snapped else 'no'}  edges {len(result.graph.edges)}"
          f"  restarts {result.restarts_used}  evaluations {result.evaluations}  seed {result.seed}")


def cmd_optimize(args) -> int:
    config = OptimizeConfig(
        restarts=args.restarts,
        max_iters=args.max_iters,
        seed=args.seed,
        step_rule=args.step_rule,
        tol=args.tol,
    )
    if args.search:
        n, d = args.search
        if args.palette:
            palette = tuple(args.palette.split(","))
        elif args.general:
            palette = tuple(read_target_document(_resolve(args.general)).get("palette") or default_palette(d))
        else:
            palette = default_palette(d)
        if len(palette) != d:
            raise InputError(f"palette {palette} does not have d={d} labels")
        if n % 2:
            print(f"no exact hit: n={n} is odd, so no perfect matchings exist")
            return EXIT_OK
        obj = _objective(args, palette, n)
        budget = SearchBudget(
            max_edges=args.max_edges,
            max_multiplicity=args.max_multiplicity,
            universe=args.universe,
            stop_at_first_exact=args.first,
        )
        results = search_topologies(n, d, obj, budget, config, palette)
        exact = [r for r in results if r.exact]
        print(f"search n={n} d={d} objective {obj.kind} constraint {obj.constraint}: "
              f"{len(exact)} exact hit(s), {len(results) - len(exact)} approximate")
        if not exact:
            print("no exact hit")
        for i, r in enumerate(results):
            _print_result(r, args.precision, i)
        best = results[0] if results else None
    else:
        if not args.topology:
            raise InputError("give a topology file or --search N D")
        topology = _load_graph(args.topology)
        obj = _objective(args, topology.palette, topology.n)
        best = optimize_weights(CompiledTopology(topology, args.max_matchings), obj, config)
        _print_result(best, args.precision)
    if best is not None:
        if args.output:
            Path(args.output).write_text(dumps_graph(best.graph))
            print(f"wrote {args.output}")
        else:
            print(dumps_graph(best.graph), end="")
        if args.trace:
            Path(args.trace).write_text("".join(f"{v!r}\n" for v in best.trace))
    return EXIT_OK


def cmd_export(args) -> int:
    graph = _load_graph(args.graph)
    print(to_dot(graph), end="")
    return EXIT_OK


def cmd_catalog(args) -> int:
    if not args.name:
        for name in catalog.names():
            print(name)
        return EXIT_OK
    try:
        print(catalog.path(args.name).read_text(), end="")
    except FileNotFoundError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def _objective_flags(p: argparse.ArgumentParser):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--mono", action="store_true", help="monochromatic objective (default)")
    g.add_argument("--kmono", nargs="+", metavar=("K", "RED"),
                   help="k-monochromatic objective; RED defaults to the first palette label")
    g.add_argument("--general", metavar="TARGET", help="target document (colorings and weights)")
    p.add_argument("--mode", choices=["conjugated", LITERAL],
                   help="override the target document's overlap mode")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="zero tolerance")
    common.add_argument("--precision", type=int, default=PRECISION, help="significant digits")
    common.add_argument("--max-matchings", type=int, default=DEFAULT_MAX_MATCHINGS)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="bicolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("state", parents=[common], help="coloring weights of a graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("fidelity", parents=[common], help="fidelity report")
    p.add_argument("graph")
    _objective_flags(p)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("verify", parents=[common], help="exact realization check")
    p.add_argument("graph")
    _objective_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("optimize", parents=[common], help="optimize weights or search topologies")
    p.add_argument("topology", nargs="?")
    p.add_argument("--search", nargs=2, type=int, metavar=("N", "D"))
    _objective_flags(p)
    p.add_argument("--palette", help="comma-separated labels for --search")
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--constraint", choices=["complex", "real", "positive"], default="complex")
    p.add_argument("--step-rule", choices=["lbfgs", "backtracking", "fixed"], default="lbfgs")
    p.add_argument("--max-edges", type=int, default=7)
    p.add_argument("--max-multiplicity", type=int, default=2)
    p.add_argument("--universe", choices=["relevant", "all"], default="relevant")
    p.add_argument("--first", action="store_true", help="stop at the first exact hit")
    p.add_argument("-o", "--output", help="write the best graph here")
    p.add_argument("--trace", help="write per-iteration objective values here")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("export", parents=[common], help="Graphviz DOT source")
    p.add_argument("graph")
    p.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("catalog", parents=[common], help="list or print bundled graphs")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MatchingExplosion, BudgetExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

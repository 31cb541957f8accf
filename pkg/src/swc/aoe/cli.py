"""Command-line interface of swc-aoe.

Exit status is 0 on success, 1 when a check fails or processing cannot complete, and 2 on
usage errors or unreadable input.
"""

import argparse
import logging
import sys
import warnings
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import TypeVar

from swc.aoe.analysis.bench import fit_exponent, run_bench
from swc.aoe.analysis.oracle import brute_force_min, random_poset
from swc.aoe.analysis.plotting import savescaling
from swc.aoe.analysis.timeline import schedule
from swc.aoe.graph.canonical import expand_aon
from swc.aoe.graph.core import equivalent, potential_critical_paths, task_reachability
from swc.aoe.graph.engine import simplify
from swc.aoe.graph.errors import AoeError, ParseError
from swc.aoe.io.api import (
    emit_aoe,
    emit_aon,
    emit_timeline,
    emit_trace,
    load_graph,
    parse_aoe,
    parse_aon,
    parse_durations,
    parse_timeline,
)
from swc.aoe.io.dot import emit_dot
from swc.aoe.schema.config import Settings, load_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _read(path: str, parse: Callable[[str], T]) -> T:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse(text)
    except AoeError as e:
        error = ParseError(f"{path}: {e.args[0] if e.args else e}")
        error.field, error.line = getattr(e, "field", None), getattr(e, "line", None)
        raise error from e


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _expand(args: argparse.Namespace, settings: Settings) -> int:
    _write(emit_aoe(expand_aon(_read(args.aon, parse_aon)), renumbered=False), args.output)
    return 0


def _simplify(args: argparse.Namespace, settings: Settings) -> int:
    g = _read(args.graph, load_graph)
    output, trace = simplify(g, engine=args.engine or settings.engine, check=settings.check_invariants)
    if args.trace is not None:
        _write(emit_trace(trace), args.trace)
    _write(emit_aoe(output), args.output)
    return 0


def _check(args: argparse.Namespace, settings: Settings) -> int:
    if equivalent(_read(args.first, load_graph), _read(args.second, load_graph)):
        return 0
    print(f"{args.first} and {args.second} are not equivalent.", file=sys.stderr)
    return 1


def _minimize(args: argparse.Namespace, settings: Settings) -> int:
    g = expand_aon(_read(args.aon, parse_aon))
    output, _ = simplify(g, engine=args.engine or settings.engine, check=settings.check_invariants)
    if args.verify:
        relation = task_reachability(output)
        if len(relation.labels) > settings.brute_force_max_tasks:
            warnings.warn(
                f"Skipped verification of {len(relation.labels)} tasks, the limit is "
                f"{settings.brute_force_max_tasks}.",
                stacklevel=2,
            )
        elif (minimum := brute_force_min(relation, settings.brute_force_max_tasks)) != len(output):
            print(f"Output has {len(output)} vertices, the minimum is {minimum}.", file=sys.stderr)
            return 1
    _write(emit_aoe(output), args.output)
    return 0


def _levels(args: argparse.Namespace, settings: Settings) -> int:
    timeline = schedule(_read(args.graph, parse_aoe), _read(args.durations, parse_durations))
    _write(emit_timeline(timeline), args.output)
    return 0


def _paths(args: argparse.Namespace, settings: Settings) -> int:
    paths = potential_critical_paths(_read(args.graph, load_graph), max_tasks=settings.max_path_tasks)
    _write("".join(" ".join(path) + "\n" for path in sorted(paths)), args.output)
    return 0


def _dot(args: argparse.Namespace, settings: Settings) -> int:
    timeline = None if args.levels is None else _read(args.levels, parse_timeline)
    _write(emit_dot(_read(args.graph, parse_aoe), timeline), args.output)
    return 0


def _gen(args: argparse.Namespace, settings: Settings) -> int:
    density = settings.density if args.density is None else args.density
    poset = random_poset(args.tasks, density, args.seed)
    _write(emit_aon(poset.to_aon().reduction()), args.output)
    return 0


def _bench(args: argparse.Namespace, settings: Settings) -> int:
    density = settings.density if args.density is None else args.density
    engines = ("optimized",) if args.skip_naive else ("optimized", "naive")
    table = run_bench(args.max_tasks, args.seed, density=density, engines=engines)
    lines = [table.to_string()]
    if len(table) > 1:
        lines.append(f"fitted exponent (optimized): {fit_exponent(table):.2f}")
    _write("\n".join(lines) + "\n", args.output)
    if args.plot is not None:
        savescaling(table, args.plot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    """Returns the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="swc-aoe", description="Build and minimize activity-on-edge project graphs."
    )
    parser.add_argument("--config", help="YAML settings file.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log INFO (-v) or DEBUG (-vv).")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, summary: str, output: bool = True) -> argparse.ArgumentParser:
        subparser = subparsers.add_parser(name, help=summary)
        subparser.set_defaults(handler=handler)
        if output:
            subparser.add_argument("-o", "--output", help="Output file. Defaults to standard output.")
        return subparser

    expand = add("expand", _expand, "Expand a dependency document into its canonical graph.")
    expand.add_argument("aon")

    simplify_parser = add("simplify", _simplify, "Simplify a graph or dependency document.")
    simplify_parser.add_argument("graph")
    simplify_parser.add_argument("--engine", choices=["naive", "optimized"])
    simplify_parser.add_argument("--trace", help="File receiving the applied rules.")

    check = add("check", _check, "Exit 0 if two graphs are equivalent, 1 otherwise.", output=False)
    check.add_argument("first")
    check.add_argument("second")

    minimize = add("minimize", _minimize, "Expand and simplify a dependency document.")
    minimize.add_argument("aon")
    minimize.add_argument("--engine", choices=["naive", "optimized"])
    minimize.add_argument("--verify", action="store_true", help="Compare against a brute-force minimum.")

    levels = add("levels", _levels, "Schedule milestones from task durations.")
    levels.add_argument("graph")
    levels.add_argument("--durations", required=True)

    paths = add("paths", _paths, "List the potential critical paths, one per line.")
    paths.add_argument("graph")

    dot = add("dot", _dot, "Write a graph in DOT format.")
    dot.add_argument("graph")
    dot.add_argument("--levels", help="Timeline document from the levels command.")

    gen = add("gen", _gen, "Generate a random dependency document.")
    gen.add_argument("--tasks", type=int, required=True)
    gen.add_argument("--density", type=float)
    gen.add_argument("--seed", type=int, required=True)

    bench = add("bench", _bench, "Time the engines on random inputs of doubling size.")
    bench.add_argument("--max-tasks", type=int, required=True)
    bench.add_argument("--seed", type=int, required=True)
    bench.add_argument("--density", type=float)
    bench.add_argument("--skip-naive", action="store_true")
    bench.add_argument("--plot", help="Image file receiving the scaling plot.")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Runs the command line and returns the exit status."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        settings = load_settings(args.config)
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    level = {0: settings.log_level, 1: "INFO"}.get(args.verbose, "DEBUG")
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logger.debug("Running %s with %r.", args.command, settings)
    try:
        return args.handler(args, settings)
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except AoeError as e:
        print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line entry point for the matchstick graph filter.

Subcommands:
    filter       evaluate a graph stream and write one JSON line per graph
    fixtures     print built-in fixture graphs as rotation text
    gen-lattice  generate random lattice matchstick graphs
    dump-lp      print the angle LP of a fixture for one outer face
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from rich.console import Console
from rich.markup import escape

from .config import Config, parse_criteria
from .criteria.angles import BOUND_MODES, angle_lp_criterion, build_angle_lp, build_angle_system
from .criteria.evaluate import EvaluationOptions
from .errors import (
    CertificateError,
    DataIntegrityError,
    FixtureError,
    MatchstickError,
    PlanarFormatError,
)
from .observability import setup_logging
from .optimize.simplex import format_lp
from .pipeline.fixtures import FIXTURE_NAMES, depicted_outer_face, emit_fixtures, load_fixture
from .pipeline.lattice import generate_lattice_corpus
from .pipeline.runner import INPUT_FORMATS, run_filter
from .planar.embedding import connectivity
from .planar.faces import outer_face_choice, trace_faces
from .planar.planar_code import serialize_planar_code
from .planar.rotation_text import format_rotation_text
from .report import RunStats
from .ui.summary import RunSummary

logger = logging.getLogger(__name__)

console = Console(stderr=True)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_MALFORMED = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchstick",
        description="Exclude planar graphs from being matchstick graphs.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("filter", help="evaluate a stream of embedded graphs")
    run.add_argument("--input", default="-", help="input file, '-' for stdin")
    run.add_argument("--format", choices=INPUT_FORMATS, default="auto")
    run.add_argument("--criteria", help="comma list of area,chain,local,lp")
    run.add_argument("--lp-bound", choices=BOUND_MODES)
    run.add_argument("--short-circuit", action=argparse.BooleanOptionalAction, default=None)
    run.add_argument("--jobs", type=int)
    run.add_argument("--reorder-buffer", type=int)
    run.add_argument("--lenient", action="store_true", help="skip malformed records")
    run.add_argument("--stats", help="write run statistics JSON here instead of stderr")
    run.add_argument("--output", help="write JSONL here instead of stdout")
    run.add_argument("--dump-lp", metavar="DIR", help="write every angle LP to DIR")
    run.add_argument("--summary", action="store_true", help="print a summary table")
    run.add_argument("--timing", action="store_true", help="record per-graph time")

    fixtures = commands.add_parser("fixtures", help="print built-in fixtures")
    fixtures.add_argument("name", nargs="?", choices=FIXTURE_NAMES)
    fixtures.add_argument("--all", action="store_true")
    fixtures.add_argument("--list", action="store_true")
    fixtures.add_argument("--output")

    lattice = commands.add_parser("gen-lattice", help="generate lattice matchstick graphs")
    lattice.add_argument("--seed", type=int, default=0)
    lattice.add_argument("--count", type=int, default=100)
    lattice.add_argument("--size", type=int, default=12, help="largest cell count")
    lattice.add_argument("--format", choices=("text", "planar_code"), default="text")
    lattice.add_argument("--output")

    dump = commands.add_parser("dump-lp", help="print the angle LP of a fixture")
    dump.add_argument("name", choices=FIXTURE_NAMES)
    dump.add_argument("--outer", type=int, help="outer face id (default: the drawn one)")
    dump.add_argument("--lp-bound", choices=BOUND_MODES, default=BOUND_MODES[0])
    dump.add_argument("--solve", action="store_true", help="also solve and print the verdict")

    return parser


def _write(path: Optional[str], payload, binary: bool = False) -> None:
    if path:
        with open(path, "wb" if binary else "w") as f:
            f.write(payload)
    elif binary:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        sys.stdout.write(payload)
        sys.stdout.flush()


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as f:
        return f.read()


def run_filter_command(args: argparse.Namespace, config: Config) -> int:
    try:
        criteria = parse_criteria(args.criteria) if args.criteria else config.criteria_names
    except ValueError as e:
        console.print(f"[red]❌ {e}[/red]")
        return EXIT_FAILURE

    jobs = args.jobs if args.jobs is not None else config.jobs
    buffer = args.reorder_buffer if args.reorder_buffer is not None else config.reorder_buffer
    if jobs < 1 or buffer < 1:
        console.print("[red]❌ --jobs and --reorder-buffer must be positive[/red]")
        return EXIT_FAILURE

    dump_dir = args.dump_lp or config.lp_dump_dir
    if dump_dir:
        os.makedirs(dump_dir, exist_ok=True)

    options = EvaluationOptions(
        criteria=criteria,
        bound_mode=args.lp_bound or config.lp_bound,
        short_circuit=config.short_circuit if args.short_circuit is None else args.short_circuit,
        lp_dump_dir=dump_dir,
        timing=args.timing,
    )

    try:
        data = _read_input(args.input)
    except OSError as e:
        console.print(f"[red]❌ Cannot read input: {e}[/red]")
        return EXIT_FAILURE

    def emit_stats(stats: RunStats) -> None:
        stats_json = stats.model_dump_json()
        if args.stats:
            with open(args.stats, "w") as f:
                f.write(stats_json + "\n")
        else:
            print(stats_json, file=sys.stderr)

    out = open(args.output, "w") if args.output else sys.stdout
    try:
        stats = run_filter(
            data,
            out,
            options=options,
            input_format=args.format,
            lenient=args.lenient,
            jobs=jobs,
            reorder_buffer=buffer,
            on_stats=emit_stats,
        )
    except PlanarFormatError as e:
        console.print(f"[red]❌ Malformed input: {e}[/red]")
        return EXIT_MALFORMED
    except (DataIntegrityError, CertificateError) as e:
        console.print(f"[red]❌ Graph evaluation failed: {e}[/red]")
        return EXIT_MALFORMED
    finally:
        if args.output:
            out.close()

    if args.summary:
        RunSummary(console).display_stats(stats)
    return EXIT_MALFORMED if stats.error_count else EXIT_OK


def run_fixtures_command(args: argparse.Namespace) -> int:
    if args.list:
        rows = []
        for name in FIXTURE_NAMES:
            embedding = load_fixture(name)
            rows.append(
                (name, embedding.vertex_count, embedding.edge_count,
                 trace_faces(embedding).face_count)
            )
        RunSummary(console).display_fixtures(rows)
        return EXIT_OK
    if not args.all and not args.name:
        console.print("[red]❌ Give a fixture name, --all or --list[/red]")
        return EXIT_FAILURE
    _write(args.output, emit_fixtures(["all"] if args.all else [args.name]))
    return EXIT_OK


def run_lattice_command(args: argparse.Namespace) -> int:
    try:
        corpus = generate_lattice_corpus(args.seed, args.count, args.size)
    except ValueError as e:
        console.print(f"[red]❌ {e}[/red]")
        return EXIT_FAILURE
    embeddings = [graph.embedding for graph in corpus]
    if args.format == "planar_code":
        _write(args.output, serialize_planar_code(embeddings), binary=True)
    else:
        _write(args.output, format_rotation_text(embeddings))
    return EXIT_OK


def run_dump_lp_command(args: argparse.Namespace) -> int:
    embedding = load_fixture(args.name)
    face_set = trace_faces(embedding)
    outer = depicted_outer_face(args.name) if args.outer is None else args.outer
    try:
        choice = outer_face_choice(face_set, outer)
    except ValueError as e:
        console.print(f"[red]❌ {e}[/red]")
        return EXIT_FAILURE
    system = build_angle_system(face_set, choice, connectivity(embedding, 2))
    sys.stdout.write(format_lp(build_angle_lp(system, args.lp_bound)))
    if args.solve:
        verdict = angle_lp_criterion(system, args.lp_bound)
        witness = escape(str(verdict.witness))
        console.print(f"[bold]{verdict.criterion}[/bold]: {verdict.outcome} {witness}")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Synchronous entry point.

    Returns:
        Exit code: 0 clean, 1 unreadable input or invalid configuration,
        2 malformed graph records.
    """
    args = build_parser().parse_args(argv)

    config = Config()
    is_valid, error_msg = config.validate()
    if not is_valid:
        console.print(f"[red]❌ Configuration error: {error_msg}[/red]")
        console.print("[yellow]Please check your .env file[/yellow]")
        return EXIT_FAILURE
    setup_logging(config)

    try:
        if args.command == "filter":
            return run_filter_command(args, config)
        if args.command == "fixtures":
            return run_fixtures_command(args)
        if args.command == "gen-lattice":
            return run_lattice_command(args)
        return run_dump_lp_command(args)
    except FixtureError as e:
        console.print(f"[red]❌ {e}[/red]")
        return EXIT_FAILURE
    except MatchstickError as e:
        console.print(f"\n[red]Fatal error: {e}[/red]")
        logger.exception("Fatal error")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

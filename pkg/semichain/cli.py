"""
Command line front end of semichain.

Every sub-command builds a config from its flags, runs the matching graph
and prints the resulting envelope. Library errors map to their exit codes.
"""

import argparse
import sys
from typing import Any, Dict, Optional, Sequence

from .formulas.tables import TABLE_IDS
from .graphs import (
    CertificateGraph,
    ClassifyGraph,
    GLSGraph,
    LeagueGraph,
    LengthGraph,
    TableGraph,
    TransformationGraph,
)
from .graphs.abstract_graph import AbstractGraph
from .graphs.length_graph import METHODS
from .helpers.families_metadata import family_help
from .utils.errors import SemichainError
from .utils.logging import get_logger
from .utils.output import export_envelope
from .utils.prettify_exec_info import prettify_exec_info

logger = get_logger(__name__)

# exit status when --strict is set and the envelope carries diagnostics
STRICT_EXIT_CODE = 5


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json", help="Output format.")
    common.add_argument(
        "--strict", action="store_true", help="Exit nonzero when the output carries diagnostics."
    )
    common.add_argument("--verbose", action="store_true", help="Log progress at INFO level.")
    common.add_argument("--debug", action="store_true", help="Log at DEBUG level.")
    common.add_argument("--output", metavar="FILE", help="Write the envelope to FILE.")
    common.add_argument("--threads", type=int, help="Worker threads (default: all cores).")
    common.add_argument("--budget-ms", type=int, help="Wall-clock budget of the searches.")
    common.add_argument(
        "--max-subsemigroups", type=int, help="Subsemigroup budget of the exhaustive search."
    )
    common.add_argument("--size-cap", type=int, help="Largest table a family may build.")
    return common


def _add_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--family", help="Family string, e.g. I:4 or brandt:c2,3.")
    source.add_argument("--table", metavar="PATH", help="Table file, text or JSON.")


def _add_mode(parser: argparse.ArgumentParser) -> None:
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="exact", action="store_true", default=True)
    mode.add_argument("--bounds", dest="exact", action="store_false")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="semichain",
        description="Longest chains of subsemigroups of finite semigroups.",
        epilog=family_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    length = subparsers.add_parser("length", parents=[common], help="Length of a semigroup.")
    _add_source(length)
    length.add_argument("--method", choices=METHODS, default="auto")
    length.add_argument(
        "--starred", action="store_true", help="Chains of inverse subsemigroups (l*)."
    )

    league = subparsers.add_parser("league", parents=[common], help="Largest league content.")
    league.add_argument("--n", type=int, required=True)
    league.add_argument("--k", type=int, required=True)
    league.add_argument("--interval", action="store_true", help="Interval partitions only.")
    league.add_argument(
        "--symmetry",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Fix the first subset to {1..k} (default: on from n = 7).",
    )
    _add_mode(league)

    table = subparsers.add_parser("table", parents=[common], help="Reproduce a published table.")
    table.add_argument("--id", type=int, required=True, choices=TABLE_IDS)
    table.add_argument("--long-run", action="store_true", help="Include the long searches.")

    gls = subparsers.add_parser("gls", parents=[common], help="Bounds for GLS(n, q).")
    gls.add_argument("--n", type=int, required=True)
    gls.add_argument("--q", type=int, required=True)

    tn = subparsers.add_parser("tn", parents=[common], help="Bounds for T_n.")
    tn.add_argument("--n", type=int, required=True)
    _add_mode(tn)

    classify = subparsers.add_parser(
        "classify", parents=[common], help="Classification and Green's classes."
    )
    _add_source(classify)

    certificate = subparsers.add_parser(
        "certificate", parents=[common], help="Verified league chain in T_n."
    )
    certificate.add_argument("--n", type=int, required=True)
    certificate.add_argument("--k", type=int, required=True)

    return parser


def _config(args: argparse.Namespace) -> Dict[str, Any]:
    budget = {"max_millis": args.budget_ms, "max_subsemigroups": args.max_subsemigroups}
    return {
        "verbose": args.verbose,
        "debug": args.debug,
        "threads": args.threads,
        "size_cap": args.size_cap,
        "budget": {key: value for key, value in budget.items() if value is not None},
        "symmetry": getattr(args, "symmetry", None),
        "long_run": getattr(args, "long_run", False),
        "strict": args.strict,
        "format": args.format,
    }


def _source(args: argparse.Namespace):
    if args.family is not None:
        return args.family, "family"
    return args.table, "table_path"


def _graph(args: argparse.Namespace, parser: argparse.ArgumentParser) -> AbstractGraph:
    config = _config(args)
    if args.command in ("league", "certificate") and not 1 <= args.k <= args.n:
        parser.error(f"need 1 <= k <= n, got n={args.n}, k={args.k}")

    if args.command == "length":
        source, key = _source(args)
        return LengthGraph(source, config, method=args.method, starred=args.starred, source_key=key)
    if args.command == "league":
        return LeagueGraph(args.n, args.k, config, exact=args.exact, interval=args.interval)
    if args.command == "table":
        return TableGraph(args.id, config)
    if args.command == "gls":
        return GLSGraph(args.n, args.q, config)
    if args.command == "tn":
        return TransformationGraph(args.n, config, exact=args.exact)
    if args.command == "classify":
        source, key = _source(args)
        return ClassifyGraph(source, config, source_key=key)
    return CertificateGraph(args.n, args.k, config)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        envelope = _graph(args, parser).run()
    except SemichainError as e:
        print(f"semichain: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        print(f"semichain: {e}", file=sys.stderr)
        return 2

    if args.verbose:
        logger.info("\n" + prettify_exec_info(envelope.exec_info))

    if args.output:
        export_envelope(envelope, args.output, args.format)
    else:
        sys.stdout.write(envelope.render(args.format))
        if args.format == "json":
            sys.stdout.write("\n")

    if args.strict and envelope.diagnostics:
        logger.warning(f"{len(envelope.diagnostics)} diagnostics in strict mode")
        return STRICT_EXIT_CODE
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

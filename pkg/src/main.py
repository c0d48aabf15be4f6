import argparse
import sys
from pathlib import Path

import pandas as pd
from loguru import logger

from contextual.parameters.parameters import default_workers, show_progress
from contextual_cli.claims import ReproductionReport
from contextual_cli.commands import COMMANDS, GRAPHS, REPRODUCTION_STEPS, SEARCHES
from contextual_io.dot import write_dot
from contextual_io.json_io import write_json


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contextual",
        description="Pauli contextuality, dessins d'enfants and Shannon capacity checks.",
    )
    parser.add_argument("--json", type=Path, help="write claims and details to this file")
    parser.add_argument("--dot", type=Path, help="write Graphviz figures into this directory")
    parser.add_argument("--workers", type=int, default=None, help="worker processes")
    parser.add_argument("--progress", action="store_true", default=None, help="progress bars")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true")
    verbosity.add_argument("-q", "--quiet", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    bell = sub.add_parser("bell-census", help="count Bell-CHSH quadruples")
    bell.add_argument("--qubits", type=int, default=2)

    pentagrams = sub.add_parser("pentagram-census", help="enumerate magic pentagrams")
    pentagrams.add_argument("--qubits", type=int, default=3)
    pentagrams.add_argument("--limit", type=int, default=100, help="pentagrams to sample")
    pentagrams.add_argument("--stream", type=Path, help="JSON-lines file for every pentagram")

    sub.add_parser("gq22", help="check GQ(2,2) and the Fano heptads")

    ks = sub.add_parser("ks-check", help="Kochen-Specker colorability")
    ks.add_argument("--geometry", type=Path, help="geometry JSON file")

    sub.add_parser("figures", help="the figure dessins and their groups")

    lowindex = sub.add_parser("lowindex", help="conjugacy classes of subgroups of given index")
    lowindex.add_argument("--index", type=int, required=True)
    lowindex.add_argument("--limit", type=int, default=20, help="tables to list")

    search = sub.add_parser("dessin-search", help="dessins with a target group")
    search.add_argument("--index", type=int, required=True, choices=sorted(SEARCHES))
    search.add_argument("--target", default=None, help="override the default target group")

    belyi = sub.add_parser("belyi-check", help="verify a Belyi map against its dessin")
    belyi.add_argument("--map", required=True, choices=["fano", "klein"])
    belyi.add_argument("--dessin", default=None, help="dessin to compare with")
    belyi.add_argument("--mirror", action="store_true", help="use the complex-conjugate map")

    capacity = sub.add_parser("capacity", help="Shannon capacity bounds of a graph")
    capacity.add_argument(
        "--graph", required=True, help=f"one of {sorted(GRAPHS)} or a graph JSON file"
    )
    capacity.add_argument("--max-k", type=int, default=None, help="largest strong power")

    everything = sub.add_parser("reproduce-all", help="run every check in a fixed order")
    everything.add_argument(
        "--skip",
        nargs="*",
        default=[],
        help=f"steps or commands to skip: {[name for name, _, _ in REPRODUCTION_STEPS]}",
    )
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = "DEBUG" if args.verbose else "WARNING" if args.quiet else "INFO"
    logger.remove()
    logger.add(sys.stderr, level=level)


def run(argv: list[str] | None = None) -> int:
    """Exit status 0 when every asserted claim holds, 1 on a mismatch, 2 on bad input."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    args.workers = default_workers() if args.workers is None else args.workers
    args.progress = show_progress() if args.progress is None else args.progress
    try:
        output = COMMANDS[args.command](args)
    except (ValueError, ArithmeticError, OSError) as err:
        logger.error(f"{args.command}: {err}")
        return 2

    report = ReproductionReport(results=output.results)
    if output.rows:
        print(pd.DataFrame(output.rows).to_string(index=False))
        print()
    print(report.to_string())
    try:
        if args.json:
            data = {
                "command": args.command,
                "ok": report.ok,
                "results": [r.model_dump() for r in report.results],
                "details": output.details,
            }
            write_json(args.json, data)
        if args.dot:
            for name, text in output.dot.items():
                write_dot(args.dot / f"{name}.dot", text)
    except (OSError, TypeError) as err:
        logger.error(f"Could not write output: {err}")
        return 2
    if not report.ok:
        logger.warning(f"Mismatched claims: {', '.join(report.mismatches)}")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

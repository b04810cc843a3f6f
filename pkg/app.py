"""
Synchronizing road coloring toolkit - command line entry point
"""

import argparse
import sys
from typing import List, Optional

from src.cli.commands import (
    Outcome,
    cmd_classify,
    cmd_color,
    cmd_decide,
    cmd_gadget,
    cmd_random_graph,
    cmd_sink_device,
    cmd_verify,
)
from src.cli.formats import RunReport
from src.gadgets.reductions import T3, T4
from src.gadgets.strongly_connected import SC
from src.utils.errors import SRCWError
from src.utils.settings import get_settings
from src.validation.sweeps import SCOPES

EXIT_CODES = {"yes": 0, "no": 1, "error": 2}


def _count(minimum: int):
    """argparse type for integers of at least `minimum`; failures exit with code 2"""
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"{value} is below {minimum}")
        return value
    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srcw",
        description="Decide whether a graph has a road coloring that makes a word a reset word",
    )
    parser.add_argument("--verbose", action="store_true", help="Status lines and progress bars on stderr")
    parser.add_argument("--format", choices=("json", "text", "dot"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="Class of a word (T1..T4)")
    p.add_argument("--word", required=True)

    p = sub.add_parser("decide", help="Decide SRCW for a graph and a word")
    p.add_argument("--graph", required=True, help="Graph JSON file")
    p.add_argument("--word", required=True)
    p.add_argument("--algorithm", choices=("auto", "poly", "brute"), default="auto")
    p.add_argument("--verify", action="store_true", help="Cross-check against brute force")
    p.add_argument("--force", action="store_true", help="Ignore the brute-force state cap")
    p.add_argument("--out", help="Write the witness coloring here")

    for name, text in (("gadget", "Build the reduction graph for a W-SAT instance"),
                       ("color", "Color a gadget from a satisfying assignment")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--word", required=True)
        p.add_argument("--wsat", required=True, help="W-SAT JSON file")
        p.add_argument("--family", choices=(T3, T4, SC))
        p.add_argument("--out")

    p = sub.add_parser("sink-device", help="Build and check D(w)")
    p.add_argument("--word", required=True)

    p = sub.add_parser("verify", help="Oracle sweeps")
    p.add_argument("scope", choices=SCOPES + ("scaling",))
    p.add_argument("--states", type=_count(1), help="Exhaustive sweep size (word length for device)")
    p.add_argument("--seed", type=_count(0))
    p.add_argument("--samples", type=_count(0))

    p = sub.add_parser("random-graph", help="Sample an out-degree-2 graph")
    p.add_argument("--states", type=_count(1), required=True)
    p.add_argument("--seed", type=_count(0))
    p.add_argument("--strongly-connected", action="store_true")
    p.add_argument("--aperiodic", action="store_true")
    p.add_argument("--out")
    return parser


def run(args: argparse.Namespace) -> Outcome:
    if args.command == "classify":
        return cmd_classify(args.word)
    if args.command == "decide":
        return cmd_decide(args.graph, args.word, args.algorithm, args.verify, args.force, args.out)
    if args.command == "gadget":
        return cmd_gadget(args.word, args.wsat, args.family, args.out)
    if args.command == "color":
        return cmd_color(args.word, args.wsat, args.family, args.out)
    if args.command == "sink-device":
        return cmd_sink_device(args.word)
    if args.command == "verify":
        return cmd_verify(args.scope, args.states, args.seed, args.samples)
    return cmd_random_graph(args.states, args.seed, args.strongly_connected, args.aperiodic, args.out)


def emit(outcome: Outcome, fmt: str, command: str) -> None:
    if fmt == "dot" and outcome.dot:
        print(outcome.dot)
    elif fmt == "text":
        print(outcome.report.to_text())
    elif command in ("gadget", "random-graph") and outcome.document and not outcome.report.witness_path:
        print(outcome.document)
    else:
        print(outcome.report.model_dump_json(indent=2))


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        get_settings().verbose = True
    try:
        outcome = run(args)
    except SRCWError as exc:
        message = f"{type(exc).__name__}: {exc}"
        print(f"❌ {message}", file=sys.stderr)
        if args.format == "json":
            print(RunReport(command=args.command, decision="error", notes=[message]).model_dump_json(indent=2))
        return EXIT_CODES["error"]
    emit(outcome, args.format, args.command)
    return EXIT_CODES[outcome.report.decision]


if __name__ == "__main__":
    sys.exit(main())

"""
Command-line entry point for rpgraph
Parses arguments, reads the input graph, dispatches to a verb and maps
errors onto the stable exit codes.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from cli.commands import (
    cmd_color, cmd_enumerate, cmd_info, cmd_minor, cmd_partition, cmd_verify, format_campaign, render,
)
from core.config import AppConfig, CampaignDefaults, ExitCodes
from core.errors import (
    CampaignConfigError, ConstructionFailed, DomainError, GraphParseError, OracleCapError,
    PreconditionNotMet, SearchBudgetExhausted,
)
from core.formats import parse_graph
from core.graph import Graph
from verify.generators import generate

logger = logging.getLogger("rpgraph")

GRAPH_VERBS = ("info", "minor", "partition", "color")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    common.add_argument("--budget", type=int, default=None,
                        help="search node budget (default: RPGRAPH_BUDGET or 10^7)")
    common.add_argument("--out", default=None, help="write the JSON result here instead of stdout")

    graph_input = argparse.ArgumentParser(add_help=False)
    graph_input.add_argument("input", nargs="?", default=None, help="graph file, or - for stdin (default)")
    graph_input.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    graph_input.add_argument("--generate", metavar="SPEC", default=None,
                             help="named graph instead of an input file, e.g. wheel:5, petersen, planar:10:1")

    parser = argparse.ArgumentParser(prog="rpgraph", description=AppConfig.TITLE)
    parser.add_argument("--version", action="version", version=f"%(prog)s {AppConfig.VERSION}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    verbs.add_parser("info", parents=[common, graph_input], help="order, size, structure and Hadwiger number")

    minor = verbs.add_parser("minor", parents=[common, graph_input], help="clique-minor witness or minimal minors")
    minor.add_argument("--t", type=int, default=None, help="clique order (default: Hadwiger number)")
    minor.add_argument("--minimal", action="store_true", help="enumerate minimal K_t minors and their intersections")

    partition = verbs.add_parser("partition", parents=[common, graph_input], help="build an RP, SRP or ERP")
    partition.add_argument("--kind", type=str.lower, choices=("rp", "srp", "erp"), required=True)
    partition.add_argument("--t", type=int, default=None, help="minor order (default: Hadwiger number)")

    color = verbs.add_parser("color", parents=[common, graph_input], help="color the graph")
    color.add_argument("--scheme", choices=("oracle", "greedy", "srp", "fc4"), default="oracle")

    verify = verbs.add_parser("verify", parents=[common], help="run a claim campaign from a JSON config")
    verify.add_argument("config", help="campaign config JSON")
    verify.add_argument("--jobs", type=int, default=None,
                        help=f"worker processes (default: config value, else {CampaignDefaults.JOBS})")
    verify.add_argument("--seed", type=int, default=None, help="override the config seed")
    verify.add_argument("--no-progress", action="store_true", help="hide the progress bar")

    enumerate_ = verbs.add_parser("enumerate", parents=[common], help="print graph6 lines of a family")
    enumerate_.add_argument("--n", type=int, required=True, help="order of the graphs")
    enumerate_.add_argument("--family", choices=("exhaustive", "random-planar", "random-gnp"), default="exhaustive")
    enumerate_.add_argument("--count", type=int, default=1, help="instances for random families")
    enumerate_.add_argument("--seed", type=int, default=CampaignDefaults.DEFAULT_SEED)
    enumerate_.add_argument("--p", type=float, default=CampaignDefaults.DEFAULT_GNP_PROBABILITY,
                            help="edge probability for random-gnp")
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def read_graph(args: argparse.Namespace) -> Graph:
    """Exactly one source: --generate, a file path, or stdin"""
    if args.generate is not None:
        if args.input not in (None, "-"):
            raise DomainError("give either an input file or --generate, not both")
        return generate(args.generate)
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as e:
            raise GraphParseError(f"cannot read {args.input}: {e}") from e
    return parse_graph(text, args.format)


def emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def dispatch(args: argparse.Namespace) -> int:
    if args.verb == "verify":
        report, code = cmd_verify(args.config, args.jobs, args.budget, args.seed, progress=not args.no_progress)
        if args.out:
            report.write(args.out)
            print(format_campaign(report))
        else:
            sys.stdout.write(report.to_json())
            print(format_campaign(report), file=sys.stderr)
        return code

    if args.verb == "enumerate":
        lines = cmd_enumerate(args.n, args.family, args.count, args.seed, args.p)
        emit("".join(f"{line}\n" for line in lines), args.out)
        return ExitCodes.OK

    g = read_graph(args)
    if args.verb == "info":
        payload, code = cmd_info(g, args.budget)
    elif args.verb == "minor":
        payload, code = cmd_minor(g, args.t, args.minimal, args.budget)
    elif args.verb == "partition":
        payload, code = cmd_partition(g, args.kind, args.t, args.budget)
    else:
        payload, code = cmd_color(g, args.scheme, args.budget)
    emit(render(payload), args.out)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return dispatch(args)
    except (GraphParseError, CampaignConfigError, DomainError) as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCodes.PARSE_OR_CONFIG
    except (SearchBudgetExhausted, OracleCapError) as e:
        payload = {"error": str(e)}
        if getattr(e, "lower_bound", None) is not None:
            payload["lower_bound"] = e.lower_bound
        if getattr(e, "witness", None) is not None:
            payload["witness"] = e.witness.to_dict()
        print(json.dumps(payload, sort_keys=True), file=sys.stderr)
        return ExitCodes.BUDGET
    except ConstructionFailed as e:
        emit(render({"certificate": e.certificate.to_dict()}), getattr(args, "out", None))
        print(f"construction failed: {e}", file=sys.stderr)
        return ExitCodes.CONSTRUCTION_FAILED
    except PreconditionNotMet as e:
        print(f"inapplicable: {e}", file=sys.stderr)
        return ExitCodes.INAPPLICABLE


if __name__ == "__main__":
    sys.exit(main())

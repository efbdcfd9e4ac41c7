"""Command-line front end over the full pipeline.

Pipeline order: parse the input file, build the attack graph, compute a
tree decomposition with the selected heuristic, normalize it, then run
the table computation for the requested semantics and reasoning mode.

Exit codes: 0 answer printed, 1 usage error, 2 input parse error,
3 internal error.  Stats go to stderr so stdout stays machine-parseable.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .af import UnknownArgumentError
from .aspartix import AspartixError, parse_aspartix
from .decomposition import HEURISTICS, decompose, elimination_order, primal_graph
from .dp import count_extensions, decide_credulous, decide_skeptical, enumerate_extensions
from .normalize import normalize

USAGE = """usage: argdp -f <file> [-s <semantics>]
             [--enum | --count | --cred <arg> | --skept <arg>]
             [--heuristic <min-fill|min-degree|mcs>] [--seed <n>] [--stats]

semantics: admissible | preferred (default preferred); default mode: --enum
"""


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    input_path: str
    semantics: str = "preferred"
    mode: str = "enum"
    query: str | None = None
    heuristic: str = "min-fill"
    seed: int = 0
    stats: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want exit(1)
        raise UsageError(message)


def parse_args(argv: Sequence[str]) -> CliConfig:
    parser = _Parser(prog="argdp", add_help=False)
    parser.add_argument("-f", dest="file")
    parser.add_argument("-s", dest="semantics", choices=("admissible", "preferred"),
                        default="preferred")
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--enum", action="store_true")
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--cred", metavar="ARG")
    mode.add_argument("--skept", metavar="ARG")
    parser.add_argument("--heuristic", choices=HEURISTICS, default="min-fill")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--stats", action="store_true")
    ns = parser.parse_args(argv)
    if ns.file is None:
        raise UsageError("missing input file (-f <file>)")
    if ns.seed < 0:
        raise UsageError("--seed must be non-negative")
    if ns.count:
        mode_name, query = "count", None
    elif ns.cred is not None:
        mode_name, query = "cred", ns.cred
    elif ns.skept is not None:
        mode_name, query = "skept", ns.skept
    else:
        mode_name, query = "enum", None
    return CliConfig(ns.file, ns.semantics, mode_name, query, ns.heuristic, ns.seed, ns.stats)


def run(config: CliConfig, out: TextIO, err: TextIO) -> int:
    try:
        with open(config.input_path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        err.write(f"cannot read {config.input_path}: {exc}\n")
        return 2
    try:
        af = parse_aspartix(text)
    except AspartixError as exc:
        err.write(f"{config.input_path}:{exc.diagnostic}\n")
        return 2
    try:
        graph = primal_graph(af)
        order = elimination_order(graph, config.heuristic, config.seed)
        dec = decompose(graph, order)
        nd = normalize(dec)
        if config.stats:
            err.write(f"arguments: {len(af.arguments)}\n")
            err.write(f"attacks: {len(af.attacks)}\n")
            err.write(f"width: {nd.width}\n")
            err.write(f"normalized nodes: {nd.node_count}\n")
        if config.mode == "enum":
            for ext in enumerate_extensions(af, nd, config.semantics):
                out.write("{" + ",".join(ext) + "}\n")
        elif config.mode == "count":
            out.write(f"{count_extensions(af, nd, config.semantics)}\n")
        elif config.mode == "cred":
            verdict = decide_credulous(af, nd, config.query)
            out.write("YES\n" if verdict else "NO\n")
        else:
            verdict = decide_skeptical(af, nd, config.query)
            out.write("YES\n" if verdict else "NO\n")
        return 0
    except UnknownArgumentError as exc:
        err.write(f"{exc}\n")
        return 1
    except Exception as exc:
        err.write(f"internal error: {exc}\n")
        return 3


def main(argv: Sequence[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        config = parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"argdp: {exc}\n{USAGE}")
        return 1
    return run(config, sys.stdout, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

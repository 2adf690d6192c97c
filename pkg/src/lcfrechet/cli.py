"""Command-line interface: ``lcfrechet <command> ...``."""

from __future__ import annotations

import argparse
import sys

from .discrete import build_grid, compute_discrete_lcfm, discrete_frechet
from .events import enumerate_events
from .fileio import (
    ParseError,
    format_matching,
    format_node_path,
    parse_matching,
    parse_node_path,
    read_curve,
)
from .matching import compute_lcfm, frechet_distance
from .oracles import verify_lc_continuous, verify_lc_discrete
from .svg import render_svg

__all__ = ["build_parser", "run_command", "main"]

EXIT_VERIFY_FAILED = 2


def _fmt(v: float) -> str:
    return f"{v:#.12g}"


def _write(path, text, out):
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_distance(args, out):
    P, Q = read_curve(args.P), read_curve(args.Q)
    out.write(_fmt(frechet_distance(P, Q)) + "\n")
    return 0


def _cmd_ddistance(args, out):
    P, Q = read_curve(args.P), read_curve(args.Q)
    out.write(_fmt(discrete_frechet(build_grid(P, Q))) + "\n")
    return 0


def _cmd_match(args, out):
    P, Q = read_curve(args.P), read_curve(args.Q)
    M = compute_lcfm(P, Q)
    _write(args.out, format_matching(M), out)
    if args.svg is not None:
        _write(args.svg, render_svg(P, Q, M, diagram=args.diagram), out)
    return 0


def _cmd_dmatch(args, out):
    P, Q = read_curve(args.P), read_curve(args.Q)
    _write(args.out, format_node_path(compute_discrete_lcfm(P, Q)), out)
    return 0


def _cmd_verify(args, out):
    P, Q = read_curve(args.P), read_curve(args.Q)
    with open(args.matching, encoding="utf-8") as fh:
        text = fh.read()
    if args.discrete:
        path = parse_node_path(text)
        g = build_grid(P, Q)
        if path[0] != (0, 0) or path[-1] != (g.shape[0] - 1, g.shape[1] - 1):
            raise ValueError("discrete matching must join the corner nodes")
        report = verify_lc_discrete(g, path)
    else:
        report = verify_lc_continuous(P, Q, parse_matching(text))
    if report.passed:
        out.write("locally correct\n")
        return 0
    witness, expected, observed = report.failures[0]
    out.write(f"not locally correct: witness {witness[0]} {witness[1]} "
              f"expected {_fmt(expected)} observed {_fmt(observed)}\n")
    return EXIT_VERIFY_FAILED


def _cmd_events(args, out):
    P, Q = read_curve(args.P), read_curve(args.Q)
    for ev in enumerate_events(P, Q):
        out.write(f"{ev.kind} {_fmt(ev.value)} {ev.end} {ev.start}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcfrechet",
        description="Locally correct Fréchet matchings of polygonal curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("P", help="first curve file")
        p.add_argument("Q", help="second curve file")
        p.set_defaults(func=func)
        return p

    pair("distance", _cmd_distance, "Fréchet distance")
    pair("ddistance", _cmd_ddistance, "discrete Fréchet distance")
    p = pair("match", _cmd_match, "locally correct Fréchet matching")
    p.add_argument("--out", help="matching file (default: stdout)")
    p.add_argument("--svg", help="write an SVG picture here")
    p.add_argument("--diagram", action="store_true",
                   help="include the free-space diagram in the SVG")
    p = pair("dmatch", _cmd_dmatch, "locally correct discrete matching")
    p.add_argument("--out", help="node path file (default: stdout)")
    p = pair("verify", _cmd_verify, "check a matching for local correctness")
    p.add_argument("matching", help="matching file")
    p.add_argument("--discrete", action="store_true",
                   help="the file holds grid nodes 'i j'")
    pair("events", _cmd_events, "list critical events")
    return parser


def run_command(argv, out=None, err=None) -> int:
    """Run one command and return its exit status.

    Usage errors exit with argparse's status 2 after printing the usage.
    Unreadable or malformed inputs exit with 1.
    """
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (OSError, ParseError, ValueError) as exc:
        err.write(f"lcfrechet {args.command}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))

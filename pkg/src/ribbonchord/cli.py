"""Command-line front end.

Exit codes: 0 success, 1 bad diagram or other domain error, 2 usage
error, 3 a four-term combination failed to vanish.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .diagram import DiagramError, canonical_form, mirror, parse, serialize, slide
from .fourterm import check_relations
from .pdpoly import CapExceeded, partial_dual_polynomial
from .pdual import partial_dual
from .surface import euler_genus, surface_stats

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_4T = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_diagram(arg: str):
    text = sys.stdin.read() if arg == "-" else arg
    return parse(text.strip())


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj))
    else:
        print(text)


def cmd_genus(args):
    eps = euler_genus(_read_diagram(args.diagram))
    _emit(args, str(eps), {"euler_genus": eps})


def cmd_stats(args):
    st = surface_stats(_read_diagram(args.diagram))
    obj = st.to_json()
    text = " ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in obj.items())
    _emit(args, text, obj)


def cmd_poly(args):
    p = partial_dual_polynomial(_read_diagram(args.diagram), cap=args.cap)
    _emit(args, str(p), p.to_json())


def cmd_pdual(args):
    d = _read_diagram(args.diagram)
    chords = [c.strip() for c in args.set.split(",") if c.strip()]
    out = serialize(partial_dual(d, chords).diagram)
    _emit(args, out, {"diagram": out})


def cmd_canon(args):
    out = canonical_form(_read_diagram(args.diagram))
    _emit(args, out, {"canonical": out})


def cmd_mirror(args):
    out = serialize(mirror(_read_diagram(args.diagram)))
    _emit(args, out, {"diagram": out})


def cmd_slide(args):
    try:
        ci, j = (int(v) for v in args.end.split(":"))
    except ValueError:
        raise UsageError(f"--end expects circle:index, got {args.end!r}")
    out = serialize(slide(_read_diagram(args.diagram), (ci, j), args.over, args.side))
    _emit(args, out, {"diagram": out})


def cmd_check4t(args):
    relations = ["T1", "T2", "T3"] if args.relation == "all" else [args.relation.upper()]
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    if not 0 <= args.max_spectators <= 8:
        raise UsageError("--max-spectators must be in 0..8")
    reports = check_relations(relations, args.trials, args.max_spectators, args.seed)
    ok = all(r.ok for r in reports)
    lines = [f"{r.relation}: {r.vanished}/{r.trials} vanished" for r in reports]
    for r in reports:
        for c in r.counterexamples:
            lines.append(f"  counterexample {c.relation} trial {c.trial}: {c.ambient} -> {c.residual}")
    lines.append("all four-term combinations vanish" if ok else "FAILED")
    obj = {
        "ok": ok,
        "seed": args.seed,
        "trials": args.trials,
        "max_spectators": args.max_spectators,
        "relations": [r.to_json() for r in reports],
    }
    _emit(args, "\n".join(lines), obj)
    return EXIT_OK if ok else EXIT_4T


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ribbonchord", description="Framed chord diagrams and partial duals.")
    parser.add_argument("--version", action="version", version=__version__)
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help):
        p = sub.add_parser(name, parents=[fmt], help=help)
        p.set_defaults(func=func)
        return p

    for name, func, help in [
        ("genus", cmd_genus, "Euler genus of the ribbon graph"),
        ("stats", cmd_stats, "surface statistics"),
        ("canon", cmd_canon, "canonical form"),
        ("mirror", cmd_mirror, "flip every circle"),
    ]:
        verb(name, func, help).add_argument("diagram", help="signed rotation, or - for stdin")

    p = verb("poly", cmd_poly, "partial-dual polynomial")
    p.add_argument("diagram")
    p.add_argument("--cap", type=int, default=None, help="maximum chord count (default 20)")

    p = verb("pdual", cmd_pdual, "partial dual with respect to a chord set")
    p.add_argument("--set", required=True, help="comma-separated chord labels")
    p.add_argument("diagram")

    p = verb("slide", cmd_slide, "slide a chord end along an adjacent chord")
    p.add_argument("--end", required=True, help="position circle:index of the end to move")
    p.add_argument("--over", required=True, help="chord to slide along")
    p.add_argument("--side", choices=("before", "after"), default=None,
                   help="which neighbour the end slides from, if both belong to the chord")
    p.add_argument("diagram")

    p = verb("check4t", cmd_check4t, "verify the framed four-term relations")
    p.add_argument("--relation", choices=("all", "t1", "t2", "t3"), default="all")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-spectators", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args) or EXIT_OK
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DiagramError, CapExceeded, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

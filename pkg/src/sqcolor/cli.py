"""Command line front end: ``sqcolor <verb> ...``.

Exit codes: 0 success, 1 improper coloring found by ``verify``,
2 input outside what the command supports (maximum degree above 5,
a disconnected graph for ``audit``, too many vertices for ``chi2``),
3 no reducible configuration, 64 usage or parse error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile

from .color import color_square_17, format_sqc, parse_sqc, verify_square_coloring
from .discharge import audit, format_audit
from .embed import format_epg, parse_epg
from .exceptions import (
    DegreeTooHigh,
    EmbeddingError,
    EPGParseError,
    IrreducibleGraph,
    NotConnected,
    PartialColoring,
    SquareColoringError,
    TooLarge,
    UnknownName,
    Unsatisfiable,
)
from .gen import GenSpec, gen_random_delta5, named_graph
from .metrics import vertex_profile
from .reduce import find_reduction, format_witness
from .square import DEFAULT_LIMIT, chi2_exact

EXIT_OK = 0
EXIT_IMPROPER = 1
EXIT_PRECONDITION = 2
EXIT_IRREDUCIBLE = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    """Write all of ``text`` or nothing: temp file in place, then rename."""
    if path in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    folder = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=folder, prefix=".sqcolor-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _load_graph(path):
    return parse_epg(_read(path))


def color_components(G):
    """Color each connected component on its own and merge with original ids."""
    colors = [None] * G.n
    for comp in G.components():
        H, kept = G.induced(comp)
        sub = color_square_17(H)
        for new, old in enumerate(kept):
            colors[old] = sub.colors[new]
    return colors


def _cmd_color(args):
    G = _load_graph(args.input)
    try:
        colors = color_components(G)
    except DegreeTooHigh as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except IrreducibleGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.audit is not None:
            sys.stderr.write(format_audit(exc.audit, details=True))
        return EXIT_IRREDUCIBLE
    _write(args.output, format_sqc(colors))
    return EXIT_OK


def _cmd_verify(args):
    if args.input == "-" and args.coloring == "-":
        raise UsageError("graph and coloring cannot both come from stdin")
    G = _load_graph(args.input)
    try:
        kappa = parse_sqc(_read(args.coloring))
    except ValueError as exc:
        raise UsageError(f"{args.coloring}: {exc}") from None
    extra = sorted(v for v in kappa if not 0 <= v < G.n)
    if extra:
        raise UsageError(f"coloring names vertices outside the graph: {extra[:10]}")
    try:
        bad = verify_square_coloring(G, kappa)
    except PartialColoring as exc:
        print(f"violation: {exc}")
        return EXIT_IMPROPER
    for u, v, d in bad:
        print(f"violation {u} {v} distance {d} color {kappa[u]}")
    if bad:
        return EXIT_IMPROPER
    print(f"ok {G.n} vertices {len(set(kappa.values()))} colors")
    return EXIT_OK


def _cmd_chi2(args):
    G = _load_graph(args.input)
    try:
        value = chi2_exact(G, args.limit)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _write(args.output, f"{value}\n")
    return EXIT_OK


def _cmd_reduce(args):
    G = _load_graph(args.input)
    if G.max_degree > 5:
        print(f"error: maximum degree {G.max_degree} exceeds 5", file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        w = find_reduction(G)
    except IrreducibleGraph as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.audit is not None:
            sys.stderr.write(format_audit(exc.audit, details=True))
        return EXIT_IRREDUCIBLE
    _write(args.output, format_witness(w) + "\n")
    return EXIT_OK


def _cmd_audit(args):
    G = _load_graph(args.input)
    try:
        report = audit(G)
    except NotConnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    _write(args.output, format_audit(report, details=args.details))
    return EXIT_OK


def _cmd_profile(args):
    G = _load_graph(args.input)
    if args.vertex is not None:
        if not 0 <= args.vertex < G.n:
            raise UsageError(f"no vertex {args.vertex} in a graph with {G.n} vertices")
        targets = [args.vertex]
    else:
        targets = range(G.n)
    _write(args.output, "".join(vertex_profile(G, v).format() + "\n" for v in targets))
    return EXIT_OK


def _cmd_gen(args):
    if args.name is not None:
        G = named_graph(args.name)
    else:
        n, seed = args.random
        G = gen_random_delta5(GenSpec(n, seed))
    _write(args.output, format_epg(G))
    return EXIT_OK


def build_parser():
    p = _Parser(prog="sqcolor", description="Square coloring of plane graphs with maximum degree 5.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help_text, graph=True):
        sp = sub.add_parser(name, help=help_text)
        if graph:
            sp.add_argument("input", help="EPG file, or - for stdin")
        sp.add_argument("-o", "--output", default="-", help="output file (default stdout)")
        sp.set_defaults(func=func)
        return sp

    verb("color", _cmd_color, "17-color the square of the graph")
    sp = verb("verify", _cmd_verify, "check a coloring of the square")
    sp.add_argument("coloring", nargs="?", default="-", help="sqc file, or - for stdin (default)")
    sp = verb("chi2", _cmd_chi2, "exact chromatic number of the square")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="largest vertex count accepted")
    verb("reduce", _cmd_reduce, "print the first reduction witness")
    sp = verb("audit", _cmd_audit, "run the discharging rules and print final charges")
    sp.add_argument("--details", action="store_true", help="append forbidden configurations and verdict")
    sp = verb("profile", _cmd_profile, "per-vertex degree, face and neighborhood counts")
    sp.add_argument("--vertex", type=int, help="only this vertex")
    sp = verb("gen", _cmd_gen, "emit a named or random graph as EPG", graph=False)
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--name", help="path-k, cycle-k, grid-a-b, prism-k, icosahedron, ...")
    which.add_argument("--random", nargs=2, type=int, metavar=("N", "SEED"))
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EPGParseError, EmbeddingError, UnknownName, Unsatisfiable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SquareColoringError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

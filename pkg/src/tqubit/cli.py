"""Command-line interface.

Subcommands:

    bracket   evaluate the Kauffman bracket of a link JSON file
    sweep     write the success-probability grid as CSV
    coeffs    print the sixteen stochastic encoding coefficients
    recover   run the braiding protocol end to end for one source qubit
    selftest  run the built-in consistency checks

Exit codes: 0 success, 1 selftest failure, 2 unparseable input, 3 diagram
too large, 4 unwritable output path, 5 degenerate level (k = 1), 6 non-real
source coordinates.
"""

from __future__ import annotations

import argparse
import cmath
import decimal
import json
import math
import sys
import warnings

from . import __version__, selftest
from .bracket import kauffman_bracket
from .diagrams import TangleDiagram
from .errors import DegenerateQubit, DiagramTooLarge, NonUnitaryPoint
from .protocols import (
    apply_recovery,
    encode_four_spin,
    encode_stochastic,
    probability_sweep,
)
from .qubit import ChernSimonsParams, hat_to_on

EXIT_SELFTEST = 1
EXIT_PARSE = 2
EXIT_TOO_LARGE = 3
EXIT_UNWRITABLE = 4
EXIT_DEGENERATE = 5
EXIT_NONREAL = 6

_CTX = decimal.Context(prec=12, rounding=decimal.ROUND_HALF_EVEN)


def fmt12(x: float) -> str:
    """Round to 12 significant digits, half to even, plain decimal notation."""
    if x != x or x in (float("inf"), float("-inf")):
        return repr(x)
    if x == 0:
        return "0"
    d = _CTX.plus(decimal.Decimal(x)).normalize(_CTX)
    if -12 <= d.adjusted() <= 12:
        return format(d, "f")
    return format(d, "e")


def fmt_complex(z: complex) -> str:
    re = fmt12(z.real)
    im = fmt12(z.imag)
    if im.startswith("-"):
        return f"{re}-{im[1:]}i"
    return f"{re}+{im}i"


def _load_diagram(path: str) -> TangleDiagram:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("top level must be a JSON object")
    crossings = data.get("crossings", [])
    free_loops = data.get("free_loops", 0)
    boundary = data.get("boundary", [])
    if not isinstance(crossings, list) or not isinstance(boundary, list):
        raise ValueError("crossings and boundary must be lists")
    if not isinstance(free_loops, int) or isinstance(free_loops, bool):
        raise ValueError("free_loops must be an integer")
    tuples = []
    for c in crossings:
        if not isinstance(c, list) or len(c) != 4 or not all(
            isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in c
        ):
            raise ValueError(f"bad crossing entry: {c!r}")
        tuples.append(tuple(c))
    if not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in boundary):
        raise ValueError("boundary ids must be nonnegative integers")
    return TangleDiagram(tuple(tuples), free_loops, tuple(boundary))


def _params_from_flags(args) -> ChernSimonsParams | None:
    """Evaluation parameters from --k / --mode, or None for --exact."""
    if args.k is not None:
        return ChernSimonsParams.from_level(args.k)
    if args.mode is not None:
        if args.mode == "inf":
            return ChernSimonsParams.classical_limit()
        return ChernSimonsParams.from_level(-1)
    return None


def cmd_bracket(args) -> int:
    try:
        diagram = _load_diagram(args.file)
    except (OSError, json.JSONDecodeError, ValueError, TypeError) as exc:
        print(f"error: cannot parse {args.file}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if diagram.boundary:
        print("error: the file describes an open tangle, not a closed link", file=sys.stderr)
        return EXIT_PARSE
    try:
        poly = kauffman_bracket(diagram)
    except DiagramTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    try:
        params = _params_from_flags(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if params is None:
        print(poly)
    else:
        print(fmt_complex(poly.evaluate(params.a)))
    return 0


def cmd_sweep(args) -> int:
    levels: list[ChernSimonsParams] = []
    for token in args.k.split(","):
        token = token.strip()
        if not token:
            continue
        if token == "inf":
            levels.append(ChernSimonsParams.classical_limit())
            continue
        try:
            k = int(token)
        except ValueError:
            print(f"error: bad level token {token!r}", file=sys.stderr)
            return EXIT_PARSE
        if k == 1:
            print("warning: skipping k=1 (degenerate qubit space)", file=sys.stderr)
            continue
        try:
            levels.append(ChernSimonsParams.from_level(k))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    if args.phi_steps < 2:
        print("error: --phi-steps must be at least 2", file=sys.stderr)
        return EXIT_PARSE
    try:
        fh = open(args.out, "w", encoding="utf-8", newline="")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    with fh:
        fh.write("k,phi,probability\n")
        for label, phi, prob in probability_sweep(levels, args.phi_steps):
            fh.write(f"{label},{fmt12(phi)},{fmt12(prob)}\n")
    return 0


def cmd_coeffs(args) -> int:
    try:
        params = ChernSimonsParams.from_level(args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        enc = encode_stochastic(args.alpha, args.beta, params)
    except DegenerateQubit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    items = [
        (f"a{i}{j}{k}{l}", enc.coefficients[i, j, k, l])
        for i in (0, 1)
        for j in (0, 1)
        for k in (0, 1)
        for l in (0, 1)
    ]
    if args.format == "json":
        print(json.dumps({name: fmt_complex(val) for name, val in items}, indent=2))
    else:
        print("index,re,im")
        for name, val in items:
            print(f"{name},{fmt12(val.real)},{fmt12(val.imag)}")
    return 0


def _parse_point(token: str) -> complex:
    named = {"1": 1 + 0j, "-1": -1 + 0j, "i": 1j, "-i": -1j}
    if token in named:
        return named[token]
    try:
        theta = float(token)
    except ValueError as exc:
        raise ValueError(f"bad evaluation point {token!r}") from exc
    return cmath.exp(1j * theta)


def cmd_recover(args) -> int:
    try:
        alpha = complex(args.alpha)
        beta = complex(args.beta)
    except ValueError:
        print("error: alpha and beta must be numbers", file=sys.stderr)
        return EXIT_PARSE
    if abs(alpha.imag) > 1e-12 or abs(beta.imag) > 1e-12:
        print("error: alpha and beta must be real for this protocol", file=sys.stderr)
        return EXIT_NONREAL
    try:
        a = _parse_point(args.a)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        state = encode_four_spin(alpha.real, beta.real, a)
        result = apply_recovery(state)
    for w in caught:
        if issubclass(w.category, NonUnitaryPoint):
            print(f"warning: {w.message}", file=sys.stderr)
    print(f"recovered {fmt_complex(result.qubit[0])} {fmt_complex(result.qubit[1])}")
    print(f"fidelity {result.fidelity:.12f}")
    return 0


def cmd_selftest(_args) -> int:
    code = selftest.run(sys.stdout)
    return EXIT_SELFTEST if code else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tqubit",
        description="Kauffman bracket evaluation and topological qubit recovery protocols.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", help="evaluate the bracket of a link JSON file")
    p.add_argument("file", help="path to the link JSON")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", help="print the exact Laurent polynomial (default)")
    group.add_argument("--k", type=int, default=None, help="evaluate at integer level k")
    group.add_argument("--mode", choices=["inf", "-1"], default=None, help="evaluate at the classical limit or the k=-1 point")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("sweep", help="write the success-probability grid as CSV")
    p.add_argument("--k", required=True, help="comma-separated levels, integers or inf")
    p.add_argument("--phi-steps", type=int, required=True, help="number of phi samples in [0, 2 pi)")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("coeffs", help="print the stochastic encoding coefficients")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("recover", help="run the braiding protocol for one source qubit")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--a", required=True, help="evaluation point: 1, -1, i, -i, or a phase in radians")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("selftest", help="run the built-in consistency checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def _join_dash_values(argv: list[str]) -> list[str]:
    """Rewrite ``--k -1,inf`` to ``--k=-1,inf`` so argparse keeps the value.

    argparse only recognizes plain negative numbers after a flag; values like
    ``-1,inf`` or ``-i`` would otherwise be read as option strings.
    """
    joined = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok in ("--k", "--a", "--alpha", "--beta")
            and nxt is not None
            and nxt.startswith("-")
            and not nxt.startswith("--")
        ):
            joined.append(f"{tok}={nxt}")
            i += 2
            continue
        joined.append(tok)
        i += 1
    return joined


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_join_dash_values(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

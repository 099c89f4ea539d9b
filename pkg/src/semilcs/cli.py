"""Command line front end: every algorithm on files or literals, with
machine-readable output and a built-in randomized cross-check mode.

Exit codes: 0 success, 2 usage errors, 3 malformed input, 4 cross-check
mismatch.
"""

import argparse
import json
import random
import sys
from pathlib import Path

from . import rle as rlemod
from .core import dense_semilocal_oracle, llcs_dp
from .netsim import network_semilocal
from .seaweed import seaweed_core
from .sparse import sparse_semilocal
from .zeroone import (
    boundary_sets,
    dominant_matches,
    llcs_01,
    llcs_banded,
    semilocal_contour,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 3
EXIT_MISMATCH = 4

_SEMILOCAL_ALGOS = {
    "seaweed": seaweed_core,
    "sparse": sparse_semilocal,
    "zeroone": semilocal_contour,
    "netsim": network_semilocal,
}


class InputError(Exception):
    pass


class MismatchError(Exception):
    pass


def _load_symbols(source, args):
    """File bytes (or the literal itself under --text) as the symbol sequence."""
    if args.text:
        return source
    try:
        data = sys.stdin.buffer.read() if source == "-" else Path(source).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {source!r}: {exc}") from None
    if args.fasta:
        data = b"".join(
            line.strip() for line in data.splitlines() if not line.startswith(b">")
        )
    elif args.strip_newlines:
        data = data.rstrip(b"\r\n")
    return data


def _load_rle(source, args):
    if args.text:
        text = source
    else:
        try:
            text = (
                sys.stdin.read() if source == "-" else Path(source).read_text()
            )
        except OSError as exc:
            raise InputError(f"cannot read {source!r}: {exc}") from None
    try:
        return rlemod.parse_rle_text(text)
    except ValueError as exc:
        raise InputError(f"bad run-length text in {source!r}: {exc}") from None


def _emit_points(cps, args, extra=None):
    out = sys.stdout
    if args.format == "json":
        doc = {
            "m": cps.m,
            "n": cps.n,
            "points": [[2 * (s - cps.m) + 1, 2 * e + 1] for s, e in enumerate(cps.end_of)],
        }
        if extra:
            doc.update(extra)
        json.dump(doc, out)
        out.write("\n")
    else:
        for start, end in cps.points():
            out.write(f"{start}\t{end}\n")
        if extra and "dense" in extra:
            for i, row in enumerate(extra["dense"]):
                for d, value in enumerate(row):
                    out.write(f"A\t{i}\t{i + d}\t{value}\n")


def _cmd_llcs(args):
    x = _load_symbols(args.x, args)
    y = _load_symbols(args.y, args)
    if args.algo == "dp":
        p = llcs_dp(x, y)
    elif args.algo == "zeroone":
        p = llcs_01(x, y)
    elif args.algo == "banded":
        p = llcs_banded(x, y)
    else:
        cps = _SEMILOCAL_ALGOS[args.algo](x, y)
        p = cps.score(0, cps.n)
    if args.format == "json":
        print(json.dumps({"llcs": p}))
    else:
        print(p)
    return EXIT_OK


def _cmd_semilocal(args):
    x = _load_symbols(args.x, args)
    y = _load_symbols(args.y, args)
    cps = _SEMILOCAL_ALGOS[args.algo](x, y)
    extra = None
    if args.dense:
        extra = {
            "dense": [
                [cps.score(i, j) for j in range(i, cps.n + 1)]
                for i in range(cps.n + 1)
            ]
        }
    _emit_points(cps, args, extra)
    return EXIT_OK


def _cmd_window(args):
    x = _load_symbols(args.x, args)
    y = _load_symbols(args.y, args)
    cps = _SEMILOCAL_ALGOS[args.algo](x, y)
    try:
        scores = cps.window_scores(args.width)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({"width": args.width, "scores": scores}))
    else:
        for value in scores:
            print(value)
    return EXIT_OK


def _cmd_contours(args):
    x = _load_symbols(args.x, args)
    y = _load_symbols(args.y, args)
    contour_set = dominant_matches(x, y)
    if args.format == "json":
        print(json.dumps({"contours": [[list(c) for c in grp] for grp in contour_set.contours]}))
    else:
        for rank, group in enumerate(contour_set.contours, 1):
            for r, c in group:
                print(f"{rank}\t{r}\t{c}")
    return EXIT_OK


def _cmd_rle(args):
    if args.encode:
        for source in (args.x, args.y):
            symbols = _load_symbols(source, args)
            try:
                print(rlemod.format_rle_text(rlemod.rle_encode(symbols)))
            except ValueError as exc:
                raise InputError(str(exc)) from None
        return EXIT_OK
    rx = _load_rle(args.x, args)
    ry = _load_rle(args.y, args)
    _emit_points(rlemod.rle_semilocal(rx, ry), args)
    return EXIT_OK


def _check_instance(x, y):
    """Cross-check every algorithm on one instance; raise on any disagreement."""
    cps = seaweed_core(x, y)
    n = len(y)
    for name, fn in (("netsim", network_semilocal),
                     ("sparse", sparse_semilocal),
                     ("zeroone", semilocal_contour)):
        if fn(x, y) != cps:
            raise MismatchError(f"{name} endpoint permutation differs from seaweed")
    rle_cps = rlemod.rle_semilocal(rlemod.rle_encode(x), rlemod.rle_encode(y))
    if rle_cps != cps:
        raise MismatchError("rle endpoint permutation differs from seaweed")
    p = llcs_dp(x, y)
    for name, value in (("seaweed score", cps.score(0, n)),
                        ("zeroone count", llcs_01(x, y)),
                        ("banded trace", llcs_banded(x, y))):
        if value != p:
            raise MismatchError(f"{name} gives {value}, dp gives {p}")
    if len(x) <= 8 and n <= 8:
        dense = dense_semilocal_oracle(x, y)
        for i in range(n + 1):
            for j in range(i, n + 1):
                if cps.score(i, j) != dense[i, j]:
                    raise MismatchError(f"score({i},{j}) != dense oracle")
    snaps = boundary_sets(x, y)
    worst = max(len(snap.boundaries) for snap in snaps)
    if worst > n - p + 1:
        raise MismatchError(f"boundary count {worst} exceeds n-p+1 = {n - p + 1}")


def _cmd_verify(args):
    rng = random.Random(args.seed)
    alphabet = "abcd"
    for k in range(args.count):
        sigma = rng.randint(1, len(alphabet))
        x = "".join(rng.choice(alphabet[:sigma]) for _ in range(rng.randint(0, args.max_len)))
        y = "".join(rng.choice(alphabet[:sigma]) for _ in range(rng.randint(1, args.max_len)))
        try:
            _check_instance(x, y)
        except MismatchError as exc:
            print(f"mismatch on instance {k}, x={x!r} y={y!r}: {exc}", file=sys.stderr)
            return EXIT_MISMATCH
    print(f"verified {args.count} instances (seed {args.seed}): all algorithms agree")
    return EXIT_OK


def _add_common(parser, with_format=True):
    parser.add_argument("x", help="first input: file path, or '-' for stdin")
    parser.add_argument("y", help="second input: file path, or '-' for stdin")
    parser.add_argument("--text", action="store_true",
                        help="treat X and Y as literal strings, not paths")
    parser.add_argument("--fasta", action="store_true",
                        help="skip '>' header lines and join sequence lines")
    parser.add_argument("--strip-newlines", action=argparse.BooleanOptionalAction,
                        default=True, help="drop trailing newlines read from files")
    if with_format:
        parser.add_argument("--format", choices=("tsv", "json"), default="tsv")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="semilcs",
        description="Semi-local LCS scores between one string and all substrings of another",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("llcs", help="print the LCS length of x and y")
    _add_common(p)
    p.add_argument("--algo", default="dp",
                   choices=("dp", "seaweed", "sparse", "zeroone", "banded", "netsim"))
    p.set_defaults(func=_cmd_llcs)

    p = sub.add_parser("semilocal", help="print the m+n seaweed endpoints")
    _add_common(p)
    p.add_argument("--algo", default="seaweed", choices=tuple(_SEMILOCAL_ALGOS))
    p.add_argument("--dense", action="store_true",
                   help="also dump the dense score table (quadratic in n)")
    p.set_defaults(func=_cmd_semilocal)

    p = sub.add_parser("window", help="print LLCS(x, y[i:i+w]) for every i")
    _add_common(p)
    p.add_argument("-w", "--width", type=int, required=True)
    p.add_argument("--algo", default="seaweed", choices=tuple(_SEMILOCAL_ALGOS))
    p.set_defaults(func=_cmd_window)

    p = sub.add_parser("contours", help="print rank-grouped dominant matches (0-based cells)")
    _add_common(p)
    p.set_defaults(func=_cmd_contours)

    p = sub.add_parser("rle", help="semilocal comparison of run-length encoded inputs")
    _add_common(p)
    p.add_argument("--encode", action="store_true",
                   help="instead: read plain inputs and print their compact RLE form")
    p.set_defaults(func=_cmd_rle)

    p = sub.add_parser("verify", help="randomized cross-check of all algorithms")
    p.add_argument("-n", "--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-len", type=int, default=10)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

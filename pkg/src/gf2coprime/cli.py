"""Command-line interface.

Exit codes: 0 on success, 1 when ``verify`` finds a discrepancy, 2 on
usage or parse errors.  Payload goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from . import compositions, constlang, enumerator, euclid, oracle
from .gf2poly import FORMATS, PolyParseError, parse, to_text


class UsageError(Exception):
    pass


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser():
    p = argparse.ArgumentParser(
        prog="gf2coprime",
        description="Enumerate and count coprime pairs of binary polynomials with nonzero constant term.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="print |A_n|")
    c.add_argument("n", type=_positive)
    c.add_argument("--per-k", action="store_true", help="one line per quotient count k, then the total")

    e = sub.add_parser("enumerate", help="stream every pair of A_n, tab-separated")
    e.add_argument("n", type=_positive)
    e.add_argument("--format", choices=FORMATS, default="bin")
    e.add_argument("--unordered", action="store_true", help="one pair per {f, g}")
    e.add_argument("--limit", type=_nonneg, default=None)
    e.add_argument("--k", type=_positive, default=None, help="only pairs with k nontrivial quotients")

    v = sub.add_parser("verify", help="check the enumerator against brute force")
    v.add_argument("n", type=_positive)
    v.add_argument("--json", action="store_true")
    v.add_argument("--max-n", type=_positive, default=oracle.DEFAULT_MAX_N,
                   help="raise the brute-force bound")

    for name, help_ in (("trace", "Euclid trace of (f, g)"), ("bijection", "flip (f, g) across the coprime bijection")):
        t = sub.add_parser(name, help=help_)
        t.add_argument("f")
        t.add_argument("g")
        t.add_argument("--format", choices=FORMATS, default="bin")

    lang = sub.add_parser("lang", help="constant-term words")
    lsub = lang.add_subparsers(dest="lang_command", required=True)
    lw = lsub.add_parser("words", help="accepted words of length k, lexicographic")
    lw.add_argument("k", type=_nonneg)
    lc = lsub.add_parser("count", help="number of accepted words of length k")
    lc.add_argument("k", type=_nonneg)

    cp = sub.add_parser("compositions", help="compositions of n into k parts")
    cp.add_argument("n", type=_positive)
    cp.add_argument("k", type=_positive)
    return p


def _poly_pair(args):
    try:
        f, g = parse(args.f, args.format), parse(args.g, args.format)
    except PolyParseError as exc:
        raise UsageError(str(exc)) from None
    return f, g


def _emit(out, lines):
    for line in lines:
        out.write(line)
        out.write("\n")
        out.flush()


def run(argv=None, out=None):
    """Parse ``argv`` and execute; returns the exit code."""
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        return _dispatch(args, out)
    except UsageError as exc:
        print(f"gf2coprime: error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def _dispatch(args, out):
    cmd = args.command
    if cmd == "count":
        if args.per_k:
            _emit(out, (f"{k}\t{enumerator.count_pairs_by_k(args.n, k)}" for k in range(2, args.n + 1)))
            _emit(out, [f"total\t{enumerator.count_pairs(args.n)}"])
        else:
            _emit(out, [str(enumerator.count_pairs(args.n))])
        return 0

    if cmd == "enumerate":
        pairs = enumerator.enumerate_pairs(args.n, k=args.k, unordered=args.unordered)
        if args.limit is not None:
            pairs = islice(pairs, args.limit)
        fmt = args.format
        _emit(out, (f"{to_text(f, fmt)}\t{to_text(g, fmt)}" for f, g in pairs))
        return 0

    if cmd == "verify":
        try:
            report = oracle.verify(args.n, max_n=args.max_n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if args.json:
            _emit(out, [json.dumps(report.to_dict())])
        else:
            status = "PASS" if report.ok else "FAIL"
            _emit(out, [
                f"{status} n={report.n} oracle={report.oracle_count} "
                f"enumerator={report.enumerator_count} formula={report.formula_count} "
                f"missing={len(report.missing)} extra={len(report.extra)}"
            ])
        return 0 if report.ok else 1

    if cmd == "trace":
        f, g = _poly_pair(args)
        try:
            trace = euclid.euclid_trace(f, g)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(out, trace.render(args.format))
        return 0

    if cmd == "bijection":
        f, g = _poly_pair(args)
        try:
            f2, g2 = euclid.bijection_flip(f, g)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        _emit(out, [f"{to_text(f2, args.format)}\t{to_text(g2, args.format)}"])
        return 0

    if cmd == "lang":
        if args.lang_command == "count":
            _emit(out, [str(constlang.count_words_closed(args.k))])
        else:
            _emit(out, constlang.words(args.k))
        return 0

    if cmd == "compositions":
        _emit(out, (str(c) for c in compositions.compositions(args.n, args.k)))
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line entry point: ``burau4 {verify,eval,eq,translate,search}``.

Exit codes: 0 success, 1 an identity check failed, 2 usage error,
3 a nontrivial Burau kernel element was found.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .braid import WordSyntaxError, braid_eq, parse_braid, verify_braid_identities
from .burau import burau_eval, verify_paper_identities
from .kernelsearch import CheckpointCorrupt, SearchConfig, search
from .normalform import format_gl, format_syllables, gl_reduce, gl_substitute, parse_gl, theorem_shape

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_KERNEL = 3

GRAMMAR = """\
braid word grammar:
  Tokens are separated by whitespace.
    1 2 3        the generators sigma_1, sigma_2, sigma_3
    -1 -2 -3     their inverses
    a            alpha = 1 2 -3 1 -2 -1
    b            beta  = 3 -1
    t            tau   = 1 2 3
    d            Delta = 1 2 3 1 2 1
    q            theta = t^4 (the full twist, central)
  Any token may carry an integer power: t^-1, d^2, 2^3.
  Example: "b^-1 a b".  Gorin-Lin words for 'translate' use only a and b.
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _word_error(text: str, exc: WordSyntaxError) -> int:
    print(f"error: {exc}", file=sys.stderr)
    print(f"  {text}", file=sys.stderr)
    print("  " + " " * (exc.column - 1) + "^", file=sys.stderr)
    return EXIT_USAGE


def _exps(text: str):
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"exponent string must be digits, got {text!r}")
    return tuple(int(c) for c in text)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="burau4",
        description="Exact computations with the reduced Burau representation of B4.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("verify", help="check every matrix and braid identity", epilog=GRAMMAR,
                   formatter_class=argparse.RawDescriptionHelpFormatter)

    ev = sub.add_parser("eval", help="Burau matrix and determinant of a braid word", epilog=GRAMMAR,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    ev.add_argument("word")

    eq = sub.add_parser("eq", help="decide equality of two braid words", epilog=GRAMMAR,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    eq.add_argument("u")
    eq.add_argument("v")

    tr = sub.add_parser("translate", help="theta/tau/Delta normal form of an a/b word", epilog=GRAMMAR,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    tr.add_argument("word")
    tr.add_argument("--trace", action="store_true", help="print every rewriting rule applied")

    se = sub.add_parser("search", help="exhaustive scalar-product search")
    se.add_argument("--max-k", type=int, required=True, help="largest number of interior exponents")
    se.add_argument("--dedup", action="store_true", help="assign projective dedup classes")
    se.add_argument("--workers", type=int, default=1)
    se.add_argument("--checkpoint", type=Path, help="checkpoint file (resumed if it exists)")
    se.add_argument("--out", type=Path, help="write records here instead of stdout")
    se.add_argument("--no-prune", action="store_true", help="test every product, not only det-compatible ones")
    se.add_argument("--plant", type=_exps, action="append", default=[],
                    help="extra exponent string to evaluate as a control, e.g. 341")
    return p


def _cmd_verify(args) -> int:
    checks = verify_paper_identities() + verify_braid_identities()
    for c in checks:
        print(c)
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} identities hold")
    return EXIT_OK if failed == 0 else EXIT_FAILED


def _cmd_eval(args) -> int:
    try:
        w = parse_braid(args.word)
    except WordSyntaxError as exc:
        return _word_error(args.word, exc)
    m = burau_eval(w)
    print(m)
    print(f"det: {m.det()}")
    return EXIT_OK


def _cmd_eq(args) -> int:
    words = []
    for text in (args.u, args.v):
        try:
            words.append(parse_braid(text))
        except WordSyntaxError as exc:
            return _word_error(text, exc)
    print("equal" if braid_eq(*words) else "not equal")
    return EXIT_OK


def _cmd_translate(args) -> int:
    try:
        w = parse_gl(args.word)
    except WordSyntaxError as exc:
        return _word_error(args.word, exc)
    reduced = gl_reduce(w)
    trace: Optional[List[str]] = [] if args.trace or args.verbose else None
    alt = gl_substitute(reduced, trace)
    if reduced != w:
        print(f"reduced: {format_gl(reduced) or '(empty)'}")
    if trace:
        for step in trace:
            print(f"  {step}")
    print(f"m: {alt.m}")
    print(f"syllables: {format_syllables(alt.syllables) or '(empty)'}")
    shape = theorem_shape(alt)
    if shape is None:
        print("shape: no (not of the form t^2 d t^i1 d ... d t^2)")
    else:
        print(f"shape: yes, exponents {' '.join(map(str, shape[1])) or '(none)'}")
    return EXIT_OK


def _cmd_search(args) -> int:
    if args.max_k < 0 or args.workers < 1:
        print("error: --max-k must be >= 0 and --workers >= 1", file=sys.stderr)
        return EXIT_USAGE
    cfg = SearchConfig(
        max_k=args.max_k,
        dedup=args.dedup,
        workers=args.workers,
        checkpoint_path=args.checkpoint,
        out_path=args.out,
        prune=not args.no_prune,
        plant=tuple(args.plant),
    )
    on_record = None if args.out else (lambda r: print(r.line()))
    try:
        summary = search(cfg, on_record=on_record)
    except (CheckpointCorrupt, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(summary.report())
    cert = summary.discovery
    if cert is not None:
        print(cert.report())
        print(cert.report(), file=sys.stderr)
        return EXIT_KERNEL
    return EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "eval": _cmd_eval,
    "eq": _cmd_eq,
    "translate": _cmd_translate,
    "search": _cmd_search,
}


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    return _COMMANDS[args.command](args)


def main() -> None:
    sys.exit(run())

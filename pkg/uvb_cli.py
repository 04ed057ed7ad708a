#!/usr/bin/env python3
"""
Command-line front end for the unrestricted virtual braid group engine.
Results go to standard output, logs and diagnostics to standard error.
"""

import sys
import argparse
import logging
from typing import Callable, Dict, List, Optional, Tuple

import pandas as pd

from config import *
from src.braid_words import BraidWord, parse, render
from src.crystal import (
    crystal_equals,
    describe_quotient,
    in_cn,
    in_image_eta,
    project_hn_quotient,
    quotient_to_record,
    writhe,
)
from src.errors import BraidWordError, UVBError
from src.oracle import run_selftest
from src.perms import adjacent_lift, parse_permutation, render_permutation
from src.torsion import order_of, torsion_conjugator
from src.uvb import (
    check_relations,
    describe_normal_form,
    describe_pure,
    nf_equals,
    nf_to_record,
    normal_form,
    to_json,
)
from src.uvp import pure_to_record

logging.basicConfig(level=LOG_LEVEL, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

WORD_COMMANDS = ("nf", "order", "conjugate-to-perm", "in-im-eta", "project", "in-cn", "writhe")
PAIR_COMMANDS = ("eq", "crystal-eq")


def _strand_count(text: str) -> int:
    """argparse type for --n: a positive integer"""
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid strand count: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"strand count must be at least 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Exact computation in unrestricted virtual braid groups")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_strand_count, help="Number of strands (default: inferred from the word)")
    common.add_argument("--json", action="store_true", help="Machine-readable output")

    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in WORD_COMMANDS:
        sub = subparsers.add_parser(name, parents=[common])
        sub.add_argument("word", help="Word in s<i>, S<i>, r<i> letters, e.g. \"s1 S2 r1\"")
    for name in PAIR_COMMANDS:
        sub = subparsers.add_parser(name, parents=[common])
        sub.add_argument("word1")
        sub.add_argument("word2")
    lift = subparsers.add_parser("lift", help="rho-only word realizing a permutation")
    lift.add_argument("perm", help="One-line notation, e.g. \"[3,1,2]\"")
    lift.add_argument("--method", choices=["insertion", "bubble"], default="insertion",
                      help="Adjacent-transposition sorting order (default: insertion)")
    lift.add_argument("--json", action="store_true", help="Machine-readable output")
    subparsers.add_parser("check-relations", parents=[common])
    selftest = subparsers.add_parser("selftest", parents=[common])
    selftest.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"Root seed (default: {DEFAULT_SEED})")
    selftest.add_argument("--max-n", type=int, default=SELFTEST_MAX_N,
                          help=f"Largest strand count exercised (default: {SELFTEST_MAX_N})")
    return parser


def _boolean(value: bool, as_json: bool) -> str:
    return to_json({"result": value}) if as_json else ("true" if value else "false")


def _parse_pair(args) -> Tuple[BraidWord, BraidWord]:
    """Both words over a common n: the explicit one, else the larger inferred count"""
    n = args.n
    if n is None:
        n = max(parse(args.word1).n, parse(args.word2).n)
    return parse(args.word1, n=n), parse(args.word2, n=n)


def _nf(args) -> Tuple[int, str]:
    v = normal_form(parse(args.word, n=args.n))
    return 0, to_json(nf_to_record(v)) if args.json else describe_normal_form(v)


def _order(args) -> Tuple[int, str]:
    order = order_of(normal_form(parse(args.word, n=args.n)))
    if args.json:
        return 0, to_json({"order": order})
    return 0, "infinite" if order is None else str(order)


def _conjugate_to_perm(args) -> Tuple[int, str]:
    v = normal_form(parse(args.word, n=args.n))
    conjugator = torsion_conjugator(v)
    if args.json:
        return 0, to_json({"conjugator": pure_to_record(conjugator), "perm": list(v.perm.images)})
    return 0, f"perm {render_permutation(v.perm)}\nconjugator {describe_pure(conjugator)}"


def _eq(args) -> Tuple[int, str]:
    w1, w2 = _parse_pair(args)
    return 0, _boolean(nf_equals(normal_form(w1), normal_form(w2)), args.json)


def _crystal_eq(args) -> Tuple[int, str]:
    w1, w2 = _parse_pair(args)
    return 0, _boolean(crystal_equals(w1, w2), args.json)


def _in_im_eta(args) -> Tuple[int, str]:
    return 0, _boolean(in_image_eta(normal_form(parse(args.word, n=args.n))), args.json)


def _in_cn(args) -> Tuple[int, str]:
    return 0, _boolean(in_cn(normal_form(parse(args.word, n=args.n))), args.json)


def _project(args) -> Tuple[int, str]:
    x = project_hn_quotient(normal_form(parse(args.word, n=args.n)))
    return 0, to_json(quotient_to_record(x)) if args.json else describe_quotient(x)


def _writhe(args) -> Tuple[int, str]:
    value = writhe(parse(args.word, n=args.n))
    return 0, to_json({"writhe": value}) if args.json else str(value)


def _lift(args) -> Tuple[int, str]:
    s = parse_permutation(args.perm)
    word = adjacent_lift(s, args.method)
    if args.json:
        return 0, to_json({"perm": list(s.images), "word": render(word)})
    return 0, render(word)


def _check_relations(args) -> Tuple[int, str]:
    if args.n is None:
        raise BraidWordError("check-relations needs --n")
    report = check_relations(args.n)
    code = 0 if report.all_passed else 1
    if args.json:
        return code, to_json(report.to_record())
    table = pd.DataFrame(report.to_record()["checks"], columns=["family", "indices", "lhs", "rhs", "passed"])
    summary = f"{len(report.checks)} relation instances on n={args.n}, {len(report.failures())} failures"
    return code, f"{table.to_string(index=False)}\n{summary}"


def _selftest(args) -> Tuple[int, str]:
    report = run_selftest(seed=args.seed, max_n=args.max_n)
    code = 0 if report.passed else 1
    if args.json:
        return code, to_json(report.to_record())
    status = "PASS" if report.passed else "FAIL"
    summary = f"{status} (seed {report.seed}, n <= {report.max_n}, memory {report.memory_mb:.1f} MB)"
    return code, f"{report.to_frame().to_string(index=False)}\n{summary}"


HANDLERS: Dict[str, Callable[[argparse.Namespace], Tuple[int, str]]] = {
    "nf": _nf,
    "eq": _eq,
    "order": _order,
    "conjugate-to-perm": _conjugate_to_perm,
    "in-im-eta": _in_im_eta,
    "crystal-eq": _crystal_eq,
    "project": _project,
    "in-cn": _in_cn,
    "writhe": _writhe,
    "lift": _lift,
    "check-relations": _check_relations,
    "selftest": _selftest,
}


def run_command(argv: List[str]) -> Tuple[int, str]:
    """Dispatch one command; returns (exit code, standard output text)"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else 2), ""

    logger.debug(f"Running {args.command}")
    try:
        return HANDLERS[args.command](args)
    except BraidWordError as e:
        logger.error(f"Parse error: {e}")
        return 2, ""
    except UVBError as e:
        logger.error(f"Precondition violated: {e}")
        return 3, ""


def main(argv: Optional[List[str]] = None):
    """Main function for command line usage"""
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    if text:
        print(text)
    sys.exit(code)


if __name__ == "__main__":
    main()

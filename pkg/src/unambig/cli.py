"""Command-line front door.

Exit codes are uniform across subcommands: 0 the checked property holds or a
witness was found, 1 it fails or nothing was found, 2 malformed usage or
input, 3 a search budget or enumeration guard was exceeded.  Input errors go
to standard error with the offending token; results go to standard output,
as labeled ``key: value`` lines or as JSON with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from .conditions import pair_condition
from .errors import DomainError, ResourceError
from .explorer import (
    conjecture_scan,
    enumerate_canonical_patterns,
    search_1uniform,
    search_sigma_ij,
)
from .generators import (
    debruijn_patterns,
    debruijn_word,
    double_letters,
    enumerate_debruijn,
    exponent_pattern,
    shortest_non_fixed_point,
    squares_pattern,
    thue_morphism,
    thue_word,
)
from .morphisms import Morphism, merge_morphism
from .solver import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    FixedPoint,
    NotFixedPoint,
    NoWitness,
    Witness,
    is_ambiguous,
    is_fixed_point,
)
from .words import Pattern, parse_pattern

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# known prefix of the ternary square-free word used by the verify bundle
THUE_PREFIX_21 = "abcacbabcbacabcacbaca"
DEBRUIJN_3_2 = "aabacbbcca"
# obtained from aabacbbcca by replacing each letter's occurrences with
# fresh variables, two blocks for the a's and one for each other letter
DB_PATTERN_SAMPLE = "1 1 2 3 4 2 2 4 4 3"


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _span(text: str) -> tuple[int, int]:
    """Inclusive integer range: either a single number or ``A..B``."""
    lo, sep, hi = text.partition("..")
    try:
        first = int(lo)
        last = int(hi) if sep else first
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    if first > last:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return first, last


def _emit(args: argparse.Namespace, record: dict, human: Iterable[str]) -> None:
    if args.json:
        print(json.dumps(record))
    else:
        for line in human:
            print(line)


def _cmd_check_ambiguity(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    sigma = Morphism.parse(args.morphism)
    verdict = is_ambiguous(
        sigma, pattern, allow_erasing=not args.nonerasing_only, budget=args.budget
    )
    if isinstance(verdict, BudgetExhausted):
        _emit(
            args,
            {"verdict": "budget-exhausted", "nodes": verdict.nodes_explored},
            [f"verdict: budget-exhausted", f"nodes: {verdict.nodes_explored}"],
        )
        return EXIT_RESOURCE
    if isinstance(verdict, Witness):
        _emit(
            args,
            {
                "verdict": "ambiguous",
                "witness": str(verdict.tau),
                "nodes": verdict.nodes_explored,
            },
            [
                "verdict: ambiguous",
                f"witness: {verdict.tau}",
                f"nodes: {verdict.nodes_explored}",
            ],
        )
        return EXIT_FAILS
    _emit(
        args,
        {"verdict": "unambiguous", "witness": None, "nodes": verdict.nodes_explored},
        ["verdict: unambiguous", f"nodes: {verdict.nodes_explored}"],
    )
    return EXIT_HOLDS


def _cmd_fixed_point(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    verdict = is_fixed_point(pattern, budget=args.budget)
    if isinstance(verdict, BudgetExhausted):
        _emit(
            args,
            {"verdict": "budget-exhausted", "nodes": verdict.nodes_explored},
            ["verdict: budget-exhausted", f"nodes: {verdict.nodes_explored}"],
        )
        return EXIT_RESOURCE
    if isinstance(verdict, FixedPoint):
        _emit(
            args,
            {
                "verdict": "fixed-point",
                "morphism": str(verdict.phi),
                "nodes": verdict.nodes_explored,
            },
            [
                "verdict: fixed-point",
                f"morphism: {verdict.phi}",
                f"nodes: {verdict.nodes_explored}",
            ],
        )
        return EXIT_HOLDS
    _emit(
        args,
        {"verdict": "not-fixed-point", "morphism": None, "nodes": verdict.nodes_explored},
        ["verdict: not-fixed-point", f"nodes: {verdict.nodes_explored}"],
    )
    return EXIT_FAILS


def _cmd_search_sigma_ij(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    found = search_sigma_ij(pattern, budget=args.budget)
    if found is None:
        _emit(args, {"pair": None, "morphism": None}, ["pair: none"])
        return EXIT_FAILS
    i, j, sigma = found
    _emit(
        args,
        {"pair": [i, j], "morphism": str(sigma)},
        [f"pair: {i} {j}", f"morphism: {sigma}"],
    )
    return EXIT_HOLDS


def _cmd_search_uniform(args: argparse.Namespace) -> int:
    pattern = parse_pattern(args.pattern)
    sigma = search_1uniform(pattern, args.alphabet_size, budget=args.budget)
    if sigma is None:
        _emit(args, {"morphism": None}, ["morphism: none"])
        return EXIT_FAILS
    _emit(args, {"morphism": str(sigma)}, [f"morphism: {sigma}"])
    return EXIT_HOLDS


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "thue":
        print(thue_word(args.length))
    elif args.family == "doubled":
        print(double_letters(thue_word(args.length)))
    elif args.family == "alpha-m":
        print(squares_pattern(args.m))
    elif args.family == "exponent":
        try:
            exponents = [int(tok) for tok in args.beta.replace(".", " ").split()]
        except ValueError:
            print(f"error: exponent list must be integers, got {args.beta!r}", file=sys.stderr)
            return EXIT_USAGE
        print(exponent_pattern(exponents))
    elif args.family == "shortest":
        pattern, sigma = shortest_non_fixed_point(args.n)
        print(pattern)
        print(sigma)
    elif args.family == "debruijn":
        if args.enumerate:
            for word in enumerate_debruijn(args.k, args.n):
                print(word)
        else:
            print(debruijn_word(args.k, args.n))
    else:
        for item in debruijn_patterns(args.k):
            print(
                json.dumps(
                    {
                        "pattern": str(item.pattern),
                        "morphism": str(item.natural_morphism),
                        "word": item.source_word,
                    }
                )
            )
    return EXIT_HOLDS


def _cmd_scan(args: argparse.Namespace) -> int:
    records = findings = budget_hits = 0
    with open(args.out, "w", encoding="ascii") as sink:
        for record in conjecture_scan(
            args.max_len, args.target, budget=args.budget, workers=args.workers
        ):
            sink.write(record.to_json() + "\n")
            records += 1
            findings += record.finding
            budget_hits += record.budget_hit
    print(f"records: {records}")
    print(f"findings: {findings}")
    print(f"budget-hits: {budget_hits}")
    if budget_hits:
        return EXIT_RESOURCE
    return EXIT_FAILS if findings else EXIT_HOLDS


def _check(ok: bool, description: str) -> bool:
    print(f"{'ok' if ok else 'FAIL'}: {description}")
    return ok


def _verify_thue(span: tuple[int, int], budget: int) -> Iterable[bool]:
    yield _check(thue_word(21) == THUE_PREFIX_21, "square-free word prefix of length 21")
    for m in range(span[0], span[1] + 1):
        alpha = squares_pattern(m)
        yield _check(
            search_1uniform(alpha, 2, budget=budget) is None,
            f"no binary unambiguous 1-uniform morphism for the m={m} squares pattern",
        )
        verdict = is_ambiguous(thue_morphism(m), alpha, budget=budget)
        yield _check(
            isinstance(verdict, NoWitness),
            f"ternary square-free morphism unambiguous at m={m}",
        )


def _verify_shortest(span: tuple[int, int], budget: int) -> Iterable[bool]:
    for n in range(span[0], span[1] + 1):
        pattern, sigma = shortest_non_fixed_point(n)
        yield _check(
            isinstance(is_fixed_point(pattern, budget=budget), NotFixedPoint),
            f"n={n} pattern is not a fixed point",
        )
        yield _check(
            len(pattern.variables) == n and all(pattern.multiplicity(v) == 2 for v in pattern.variables),
            f"n={n} pattern has {n} variables, each twice",
        )
        yield _check(
            isinstance(is_ambiguous(sigma, pattern, budget=budget), NoWitness),
            f"n={n} binary morphism unambiguous",
        )


def _verify_pi_db(k: int, budget: int) -> Iterable[bool]:
    yield _check(debruijn_word(3, 2) == DEBRUIJN_3_2, "de Bruijn word for k=3, n=2")
    items = list(debruijn_patterns(k))
    expected_vars = (k - 1) * (k // 2) + (k + 1) // 2
    yield _check(
        all(len(item.pattern.variables) == expected_vars for item in items),
        f"every pattern has exactly {expected_vars} variables",
    )
    distinct = {item.pattern for item in items}
    yield _check(len(distinct) >= 36, f"at least 36 distinct patterns (got {len(distinct)})")
    if k == 3:
        yield _check(parse_pattern(DB_PATTERN_SAMPLE) in distinct, "sample pattern emitted")
    checked: set[tuple[Pattern, Morphism]] = set()
    bad = 0
    for item in items:
        key = (item.pattern, item.natural_morphism)
        if key in checked:
            continue
        checked.add(key)
        if not isinstance(is_ambiguous(item.natural_morphism, item.pattern, budget=budget), NoWitness):
            bad += 1
    yield _check(bad == 0, f"all {len(checked)} natural morphisms unambiguous")


def _verify_pair_theorem(max_len: int, budget: int) -> Iterable[bool]:
    patterns = checked_pairs = violations = 0
    for length in range(2, max_len + 1):
        for mult in range(2, length + 1):
            if length % mult:
                continue
            for pattern in enumerate_canonical_patterns(length, uniform_multiplicity=mult):
                if isinstance(is_fixed_point(pattern, budget=budget), FixedPoint):
                    continue
                patterns += 1
                variables = sorted(pattern.variables)
                for i in variables:
                    for j in variables:
                        if i == j or not pair_condition(pattern, i, j).passes:
                            continue
                        checked_pairs += 1
                        sigma = merge_morphism(variables, i, j)
                        if not isinstance(is_ambiguous(sigma, pattern, budget=budget), NoWitness):
                            violations += 1
    yield _check(
        violations == 0,
        f"{checked_pairs} passing pairs across {patterns} uniform non-fixed-point "
        f"patterns of length <= {max_len} all verify unambiguous",
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.bundle == "thue":
        results = _verify_thue(args.m, args.budget)
    elif args.bundle == "shortest":
        results = _verify_shortest(args.n, args.budget)
    elif args.bundle == "pi-db":
        results = _verify_pi_db(args.k, args.budget)
    else:
        results = _verify_pair_theorem(args.max_len, args.budget)
    return EXIT_HOLDS if all(list(results)) else EXIT_FAILS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unambig",
        description="Decide ambiguity of morphisms with respect to patterns, "
        "detect fixed points, generate pattern families, and scan pattern space.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    check = commands.add_parser(
        "check-ambiguity", help="decide whether a morphism is ambiguous w.r.t. a pattern"
    )
    check.add_argument("--pattern", required=True)
    check.add_argument("--morphism", required=True)
    check.add_argument(
        "--nonerasing-only",
        action="store_true",
        help="only nonerasing competitors count (weak unambiguity)",
    )
    check.add_argument("--json", action="store_true")
    check.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    check.set_defaults(handler=_cmd_check_ambiguity)

    fixed = commands.add_parser(
        "fixed-point", help="decide whether a pattern is a fixed point of a nontrivial morphism"
    )
    fixed.add_argument("--pattern", required=True)
    fixed.add_argument("--json", action="store_true")
    fixed.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    fixed.set_defaults(handler=_cmd_fixed_point)

    sigij = commands.add_parser(
        "search-sigma-ij", help="find an unambiguous pair-merging morphism"
    )
    sigij.add_argument("--pattern", required=True)
    sigij.add_argument("--json", action="store_true")
    sigij.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    sigij.set_defaults(handler=_cmd_search_sigma_ij)

    uniform = commands.add_parser(
        "search-uniform", help="find an unambiguous 1-uniform morphism over at most K letters"
    )
    uniform.add_argument("--pattern", required=True)
    uniform.add_argument("--alphabet-size", type=_positive, required=True)
    uniform.add_argument("--json", action="store_true")
    uniform.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    uniform.set_defaults(handler=_cmd_search_uniform)

    generate = commands.add_parser("generate", help="print a pattern or word family")
    families = generate.add_subparsers(dest="family", required=True)
    thue = families.add_parser("thue", help="prefix of the ternary square-free word")
    thue.add_argument("--length", type=_positive, required=True)
    doubled = families.add_parser("doubled", help="square-free prefix with every letter doubled")
    doubled.add_argument("--length", type=_positive, required=True)
    alpha = families.add_parser("alpha-m", help="pattern 1 1 2 2 ... m m")
    alpha.add_argument("--m", type=_positive, required=True)
    exponent = families.add_parser(
        "exponent", help="pattern with blockwise exponents over a square-free frame"
    )
    exponent.add_argument("--beta", required=True, metavar='"r1 r2 ..."')
    shortest = families.add_parser(
        "shortest", help="shortest n-variable non-fixed-point pattern and its binary morphism"
    )
    shortest.add_argument("--n", type=_positive, required=True)
    debruijn = families.add_parser("debruijn", help="non-cyclic de Bruijn sequence B'(k, n)")
    debruijn.add_argument("--k", type=_positive, required=True)
    debruijn.add_argument("--n", type=_positive, required=True)
    debruijn.add_argument("--enumerate", action="store_true", help="print every B'(k, n) word")
    pidb = families.add_parser(
        "pi-db", help="patterns with morphisms mapping onto de Bruijn words B'(k, 2)"
    )
    pidb.add_argument("--k", type=_positive, required=True)
    generate.set_defaults(handler=_cmd_generate)

    scan = commands.add_parser("scan", help="sweep canonical patterns and record verdicts")
    scan.add_argument(
        "--target",
        required=True,
        choices=["conjecture1", "conjecture2", "conjecture3", "theorem7"],
    )
    scan.add_argument("--max-len", type=_positive, required=True)
    scan.add_argument("--workers", type=_positive, default=1)
    scan.add_argument("--out", required=True, metavar="FILE.jsonl")
    scan.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    scan.set_defaults(handler=_cmd_scan)

    verify = commands.add_parser("verify", help="run a named bundle of exact checks")
    bundles = verify.add_subparsers(dest="bundle", required=True)
    vthue = bundles.add_parser("thue", help="square-free word family checks")
    vthue.add_argument("--m", type=_span, default=(4, 6), metavar="A..B")
    vshort = bundles.add_parser("shortest", help="shortest non-fixed-point pattern checks")
    vshort.add_argument("--n", type=_span, default=(2, 8), metavar="A..B")
    vpidb = bundles.add_parser("pi-db", help="de Bruijn pattern family checks")
    vpidb.add_argument("--k", type=_positive, default=3)
    vpair = bundles.add_parser("pair-theorem", help="pair condition soundness sweep")
    vpair.add_argument("--max-len", type=_positive, default=10)
    verify.set_defaults(handler=_cmd_verify, budget=DEFAULT_BUDGET)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def run() -> None:
    try:
        code = main(sys.argv[1:])
        sys.stdout.flush()
    except BrokenPipeError:
        # the consumer closed the pipe; suppress the traceback on interpreter
        # shutdown and report failure the way a SIGPIPE'd tool would
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_FAILS
    raise SystemExit(code)

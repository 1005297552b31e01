"""Command-line front end.

    shuffle-quadri eval "se(a,bc)"                 # -> bac
    shuffle-quadri check --all --alphabet-size 2 --max-len 6
    shuffle-quadri laws
    shuffle-quadri example

Exit status: 0 on success, 1 if a law fails, 2 on usage, parse or domain errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .core import DEFAULT_ALPHABET, Alphabet
from .errors import AlgebraError
from .expr import evaluate, parse
from .laws import (CATALOG, GROUPS, InstanceSpec, check_law, example_sides,
                   expand_names, run_suite)

EXIT_OK, EXIT_LAW_FAILED, EXIT_USAGE = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _error(exc) -> int:
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_USAGE


def cmd_eval(args) -> int:
    try:
        alphabet = Alphabet(args.alphabet) if args.alphabet else DEFAULT_ALPHABET
        value = evaluate(parse(args.expr), alphabet)
    except (AlgebraError, ValueError) as exc:
        return _error(exc)
    if args.format == "json":
        print(_dump(value.to_json(alphabet)))
    else:
        print(value.format(alphabet))
    return EXIT_OK


def _print_report(report):
    status = "PASS" if report.passed else "FAIL"
    line = (f"{status} {report.law:<34} instances={report.instances_checked} "
            f"skipped={report.skipped} {report.elapsed * 1000:.1f}ms")
    print(line)
    for found, tag in ((report.counterexample, "counterexample"), (report.witness, "witness")):
        if found is None:
            continue
        inputs = ", ".join(DEFAULT_ALPHABET.format_word(w) for w in found.inputs)
        print(f"    {tag} ({inputs}) for {found.equation}")
        print(f"      lhs = {found.lhs}")
        print(f"      rhs = {found.rhs}")
    for note in report.notes:
        print(f"    note: {note}")
    if report.error:
        print(f"    error: {report.error}")


def cmd_check(args) -> int:
    try:
        spec = InstanceSpec(args.alphabet_size, args.max_len)
        laws = None if args.all or not args.law else expand_names(args.law)
    except AlgebraError as exc:
        return _error(exc)
    reports = run_suite(spec, laws, jobs=args.jobs)
    if args.format == "json":
        print(_dump([r.to_json() for r in reports]))
    else:
        for r in reports:
            _print_report(r)
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports)} laws: {len(reports) - failed} passed, {failed} failed")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_LAW_FAILED


def cmd_laws(args) -> int:
    for law in CATALOG:
        print(f"{law.name:<34} arity={law.arity}  {law.anchor}")
    print()
    for group, members in GROUPS.items():
        print(f"group {group}: {', '.join(members)}")
    return EXIT_OK


def cmd_example(args) -> int:
    names = "u1=a u2=b v1=c v2=d w=e"
    print(f"u = ab, v = cd, w = e   ({names})")
    for label, value in example_sides().items():
        print(f"{label} = {value}")
        print(f"    coefficient sum {value.coefficient_sum()}")
    report = check_law("paper_example", InstanceSpec(5, 5))
    _print_report(report)
    return EXIT_OK if report.passed else EXIT_LAW_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shuffle-quadri",
        description="Shuffle quadri-algebra calculator and law checker.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    p.add_argument("--alphabet", help="letters of the alphabet (default a-z)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="run law suites")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--law", action="append", metavar="NAME",
                       help="law or group name; may be repeated")
    which.add_argument("--all", action="store_true", help="run the whole catalog (default)")
    p.add_argument("--alphabet-size", type=int, default=2, metavar="K")
    p.add_argument("--max-len", type=int, default=6, metavar="L")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("laws", help="list the law catalog")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("example", help="reproduce the worked example")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

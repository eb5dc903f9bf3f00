"""Command-line interface.

Exit codes: 0 success (negative answers included), 1 usage or parse error,
2 precondition violation, 3 completion obstruction.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import serialize
from .freealg import InvalidInputError
from .gsb import Outcome, check_gsb, complete, membership
from .parsing import ParseError, PresentationError, format_polynomial, format_word, parse_polynomial, parse_presentation
from .rewrite import InvalidRuleSetError, PreconditionError, RuleSet, enumerate_irr, normal_form
from .solver import InverseCertificate, NoSolutionUpToDegree, TrivialRing, invert_element

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_OBSTRUCTION = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Fail(EXIT_USAGE, f"{self.prog}: error: {message}")


def _load(path: str) -> RuleSet:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _Fail(EXIT_USAGE, f"cannot read {path}: {e.strerror}")
    except UnicodeDecodeError:
        raise _Fail(EXIT_USAGE, f"{path} is not UTF-8 text")
    try:
        return parse_presentation(text)
    except (ParseError, PresentationError, InvalidRuleSetError) as e:
        raise _Fail(EXIT_USAGE, f"{path}: {e}")


def _parse_expr(text: str, P: RuleSet, flag: str):
    try:
        return parse_polynomial(text, P)
    except ParseError as e:
        raise _Fail(EXIT_USAGE, f"{flag}: {e}")


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2))


def _completed(P: RuleSet, max_degree: int, max_rules: int) -> RuleSet:
    res = complete(P, max_degree, max_rules)
    if res.outcome is Outcome.COMPLETED:
        if res.trivial:
            print("WARNING: 1 lies in the ideal; the presented ring is trivial", file=sys.stderr)
        return res.rules
    if res.outcome is Outcome.BUDGET_EXHAUSTED:
        raise _Fail(EXIT_PRECONDITION, f"completion did not finish: {res.reason}")
    raise _Fail(EXIT_OBSTRUCTION, f"completion obstructed: {res.reason}")


def cmd_nf(args) -> int:
    P = _load(args.file)
    p = _parse_expr(args.poly, P, "--poly")
    _, trace = normal_form(p, P, args.mode)
    if args.json:
        _emit_json(serialize.nf_to_dict(trace, args.mode, P))
        return EXIT_OK
    if args.trace:
        for line in serialize.trace_lines(trace, P):
            print(line)
    print(format_polynomial(trace.output, P))
    return EXIT_OK


def cmd_gsb_check(args) -> int:
    P = _load(args.file)
    report = check_gsb(P)
    if args.json:
        _emit_json(serialize.report_to_dict(report, P))
        return EXIT_OK
    n = len(report.entries)
    if report.is_gsb:
        print(f"GSB: yes ({n} compositions, all reduce to 0)")
    else:
        print(f"GSB: no ({len(report.failing())} of {n} compositions do not reduce to 0)")
    for e in report.entries:
        c = e.composition
        print(f"  {c.kind.value} rules ({c.rule_left}, {c.rule_right}) at "
              f"{format_word(c.ambiguity, P)}: {format_polynomial(c.poly, P)} -> "
              f"{format_polynomial(e.residual, P)}")
    return EXIT_OK


def cmd_complete(args) -> int:
    P = _load(args.file)
    res = complete(P, args.max_degree, args.max_rules)
    if args.json:
        _emit_json(serialize.completion_to_dict(res))
    else:
        print(f"Completion: {res.outcome.value}" + (f" ({res.reason})" if res.reason else ""))
        if res.outcome is Outcome.CONSTANT_OBSTRUCTION:
            print(f"constant in ideal: {res.constant}")
        elif res.outcome is Outcome.NONMONIC_OBSTRUCTION:
            print(f"non-monic residual: {format_polynomial(res.residual, P)}")
        else:
            for line in serialize.rules_to_list(res.rules):
                print(f"  {line}")
    if res.trivial:
        print("WARNING: 1 lies in the ideal; the presented ring is trivial", file=sys.stderr)
    if res.outcome in (Outcome.CONSTANT_OBSTRUCTION, Outcome.NONMONIC_OBSTRUCTION):
        return EXIT_OBSTRUCTION
    return EXIT_OK


def cmd_irr(args) -> int:
    P = _load(args.file)
    if args.max_degree < 0:
        raise _Fail(EXIT_USAGE, "--max-degree must be non-negative")
    for w in enumerate_irr(P, args.max_degree):
        print(format_word(w, P))
    return EXIT_OK


def cmd_member(args) -> int:
    P = _load(args.file)
    p = _parse_expr(args.poly, P, "--poly")
    if args.auto_complete:
        P = _completed(P, args.max_completion_degree, args.max_rules)
    try:
        member, trace = membership(p, P)
    except PreconditionError as e:
        raise _Fail(EXIT_PRECONDITION, f"{e} (use --auto-complete)")
    if args.json:
        _emit_json(serialize.membership_to_dict(p, member, trace, P))
        return EXIT_OK
    if args.trace:
        for line in serialize.trace_lines(trace, P):
            print(line)
    if member:
        print(f"yes (certificate: {len(trace.steps)} reduction steps to 0)")
    else:
        print(f"no (normal form: {format_polynomial(trace.output, P)})")
    return EXIT_OK


def cmd_invert(args) -> int:
    P = _load(args.file)
    u = _parse_expr(args.elem, P, "--elem")
    if args.auto_complete:
        P = _completed(P, args.max_completion_degree, args.max_rules)
    if args.max_degree is not None and args.max_degree < 0:
        raise _Fail(EXIT_USAGE, "--max-degree must be non-negative")
    try:
        result = invert_element(u, P, args.max_degree)
    except PreconditionError as e:
        raise _Fail(EXIT_PRECONDITION, str(e))
    if isinstance(result, TrivialRing):
        print("WARNING: the presented ring is trivial; every element is invertible with inverse 0",
              file=sys.stderr)
    if args.json:
        _emit_json(serialize.inverse_to_dict(result, P))
    elif isinstance(result, InverseCertificate):
        print(format_polynomial(result.inverse, P))
    elif isinstance(result, NoSolutionUpToDegree):
        print(f"no inverse found up to degree {result.degree_bound} (unknown beyond this bound)")
    else:
        print("0")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="shirshov",
                             description="Groebner-Shirshov bases for algebras over the integers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("nf", help="normal form of a polynomial")
    p.add_argument("file")
    p.add_argument("--poly", required=True)
    p.add_argument("--mode", choices=("head", "full"), default="full")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("gsb-check", help="check whether the relations form a GSB")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gsb_check)

    p = sub.add_parser("complete", help="complete the relations to a GSB")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=16)
    p.add_argument("--max-rules", type=int, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("irr", help="list irreducible words")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_irr)

    for name, flag, func, helptext in (("member", "--poly", cmd_member, "ideal membership"),
                                       ("invert", "--elem", cmd_invert, "two-sided inverse")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument(flag, required=True)
        p.add_argument("--auto-complete", action="store_true")
        p.add_argument("--max-completion-degree", type=int, default=16)
        p.add_argument("--max-rules", type=int, default=64)
        p.add_argument("--json", action="store_true")
        if name == "member":
            p.add_argument("--trace", action="store_true")
        else:
            p.add_argument("--max-degree", type=int, default=None)
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "max_rules", 1) <= 0 or getattr(args, "max_completion_degree", 1) <= 0:
            raise _Fail(EXIT_USAGE, "completion budgets must be positive")
        if args.command == "complete" and args.max_degree <= 0:
            raise _Fail(EXIT_USAGE, "--max-degree must be positive")
        return args.func(args)
    except _Fail as e:
        print(e, file=sys.stderr)
        return e.code
    except InvalidInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


run_cli = main

if __name__ == "__main__":
    sys.exit(main())

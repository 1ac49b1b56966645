"""Command-line front end: ``qmock verify|expand|convert|list|report``.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error (including an
unknown identity id), 3 an evaluation error such as a pole or insufficient precision.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from fractions import Fraction
from typing import List, Optional, Sequence

from . import conversion, dsl, registry
from .algebra import format_series
from .errors import DSLSyntaxError, InsufficientValidity, QMockError, UnknownIdentity, UnknownTheorem
from .report import VerificationReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EVAL = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so ``run`` can return the code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _order(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("order must be a rational number, got %r" % text)
    if v < 0:
        raise argparse.ArgumentTypeError("order must be non-negative")
    return v


def _json_number(v: Fraction):
    return v.numerator if v.denominator == 1 else str(v)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qmock", description="Exact q-series verification of mock theta identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify catalog identities")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--id", action="append", metavar="ID", help="identity id (repeatable)")
    which.add_argument("--all", action="store_true", help="every catalog identity")
    v.add_argument("--order", type=_order, help="compare through q^ORDER (default: per entry)")
    v.add_argument("--json", metavar="FILE", help="also write a JSON report ('-' for stdout)")
    v.add_argument("--parallel", action="store_true", help="spread entries over worker processes")
    v.add_argument("--workers", type=int, default=None, help="worker count for --parallel")

    e = sub.add_parser("expand", help="expand an expression as a truncated series")
    e.add_argument("expr")
    e.add_argument("--order", type=_order, default=Fraction(20))
    e.add_argument("--denominator", type=int, default=1, help="exponent denominator hint")

    c = sub.add_parser("convert", help="check an f-to-m conversion instance")
    c.add_argument("--variant", choices=("coprime", "odd"), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--p", type=int, default=2)
    c.add_argument("--x", required=True, help="monomial, e.g. -q^(1/2)")
    c.add_argument("--y", required=True)
    c.add_argument("--base", default="q")
    c.add_argument("--order", type=_order, default=Fraction(60))

    ls = sub.add_parser("list", help="list catalog identities")
    ls.add_argument("--tag", action="append", default=[], help="keep entries carrying this tag (repeatable)")

    r = sub.add_parser("report", help="verify identities and specializations, summarise by section")
    r.add_argument("--order", type=_order, help="override every default order")
    r.add_argument("--json", metavar="FILE")
    r.add_argument("--parallel", action="store_true")
    return p


def _exit_code(reports: Sequence[VerificationReport]) -> int:
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return EXIT_FAIL
    if "error" in statuses:
        return EXIT_EVAL
    return EXIT_OK


def _write_json(path: str, order: Fraction, reports: Sequence[VerificationReport]) -> None:
    doc = {"order": _json_number(order), "results": []}
    for r in reports:
        item = r.to_json()
        item["order"] = _json_number(Fraction(r.order))
        doc["results"].append(item)
    text = json.dumps(doc, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _summary(reports: Sequence[VerificationReport]) -> str:
    n = Counter(r.status for r in reports)
    return "%d checked: %d passed, %d failed, %d errors" % (len(reports), n["pass"], n["fail"], n["error"])


def _cmd_verify(args) -> int:
    cat = registry.catalog()
    if args.all:
        reports = registry.verify_all(args.order, parallel=args.parallel, cat=cat, workers=args.workers)
    else:
        for i in args.id:
            cat.get(i)  # unknown ids are a usage error before any work starts
        if args.parallel:
            reports = registry.verify_all(args.order, parallel=True, cat=cat, ids=args.id, workers=args.workers)
        else:
            reports = [registry.verify(i, args.order, cat) for i in args.id]
    for r in reports:
        print(r.line())
    print(_summary(reports))
    if args.json:
        top = args.order if args.order is not None else max((Fraction(r.order) for r in reports), default=Fraction(0))
        _write_json(args.json, top, reports)
    return _exit_code(reports)


def _cmd_expand(args) -> int:
    if args.denominator < 1:
        raise argparse.ArgumentTypeError("--denominator must be positive")
    s = dsl.evaluate(dsl.parse(args.expr), args.order, args.denominator)
    print(format_series(s))
    return EXIT_OK


def _monomial(text: str):
    return dsl.Evaluator().mono_arg(dsl.parse(text), {})


def _cmd_convert(args) -> int:
    x, y, base = _monomial(args.x), _monomial(args.y), _monomial(args.base)
    params = conversion.ConversionParams(args.n, args.p)
    try:
        params.check_coprime() if args.variant == "coprime" else params.check_odd()
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if args.variant == "coprime":
        rep = conversion.fm_identity_coprime(params, x, y, base, args.order)
    else:
        rep = conversion.fm_identity_odd(args.n, x, y, base, args.order)
    print(rep.line())
    return _exit_code([rep])


def _cmd_list(args) -> int:
    for e in registry.list_identities(args.tag):
        print("%-40s D=%-2d order=%-3d %s" % (e.id, e.D, e.default_order, ",".join(sorted(e.tags))))
    return EXIT_OK


def _cmd_report(args) -> int:
    cat = registry.catalog()
    idents = registry.verify_all(args.order, parallel=args.parallel, cat=cat)
    specs = registry.verify_specializations(args.order if args.order is not None else 40, cat)
    by_section = {}
    for e, r in zip(cat.identities, idents):
        by_section.setdefault(e.section, Counter())[r.status] += 1
    print("%-8s %6s %6s %6s" % ("section", "pass", "fail", "error"))
    for sec in sorted(by_section):
        n = by_section[sec]
        print("%-8d %6d %6d %6d" % (sec, n["pass"], n["fail"], n["error"]))
    for r in idents + specs:
        if not r.ok:
            print(r.line())
    print("identities: " + _summary(idents))
    print("specializations: " + _summary(specs))
    if args.json:
        top = args.order if args.order is not None else max(Fraction(r.order) for r in idents + specs)
        _write_json(args.json, top, idents + specs)
    return _exit_code(idents + specs)


_COMMANDS = {"verify": _cmd_verify, "expand": _cmd_expand, "convert": _cmd_convert,
             "list": _cmd_list, "report": _cmd_report}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (UnknownIdentity, UnknownTheorem) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (DSLSyntaxError, argparse.ArgumentTypeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (InsufficientValidity, QMockError, ValueError, ZeroDivisionError) as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_EVAL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

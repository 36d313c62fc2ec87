"""Command-line front end.

Subcommands:

``prove``    discover a recurrence with certificate for a summand
``verify``   run an identity corpus and report per-entry verdicts
``eval3f2``  evaluate a terminating 3F2 at unit argument
``watson``   evaluate Watson's 3F2 closed form, optionally after the
             one-step contiguous reduction

Exit codes: 0 all checks pass, 1 a check or evaluation fails, 2 bad
usage or unparsable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from .corpus import CorpusError, CorpusOptions, run_corpus, write_report
from .hyperterm import Support, parse_summand
from .lexer import ParseError
from .watson import (GammaPoleError, HalfInt, PFQSpec, SeriesError, chu_w01,
                     pfq_terminating, watson_w00)
from .zeilberger import verify_certificate, zeilberger

_VALUE_FLAGS = {"--summand", "--lower", "--upper", "--max-order", "--corpus",
                "--range", "--jobs", "--report", "--a", "--b", "--c",
                "--reduce"}


def _merge_flag_values(argv: list[str]) -> list[str]:
    # argparse mistakes values like "-2,-3,1/2" for option strings; fold
    # every known flag's value into --flag=value form before parsing.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) \
                and not argv[i + 1].startswith("--"):
            out.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="telescope",
        description="Discover, certify, and verify recurrences and closed "
                    "forms for hypergeometric sums, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="discover a recurrence with a "
                           "telescoping certificate")
    prove.add_argument("--summand", required=True,
                       help="hypergeometric term in n and k")
    prove.add_argument("--lower", required=True, help="lower summation bound")
    prove.add_argument("--upper", required=True, help="upper summation bound")
    prove.add_argument("--max-order", type=int, default=4,
                       help="largest recurrence order to try (default 4)")
    prove.add_argument("--json", action="store_true",
                       help="emit the result as JSON instead of text")

    verify = sub.add_parser("verify", help="run an identity corpus")
    verify.add_argument("--corpus", default=None,
                        help="corpus TOML file (default: bundled corpus)")
    verify.add_argument("--range", default=None, metavar="A..B",
                        help="override every entry's check range")
    verify.add_argument("--jobs", type=int, default=1,
                        help="process entries in N parallel workers")
    verify.add_argument("--report", default=None, metavar="FILE",
                        help="also write a JSON report to FILE")

    eval3f2 = sub.add_parser("eval3f2", help="evaluate a terminating 3F2 "
                             "at unit argument")
    eval3f2.add_argument("--upper", required=True,
                         help="three comma-separated parameters, e.g. -2,-3,1/2")
    eval3f2.add_argument("--lower", required=True,
                         help="two comma-separated parameters, e.g. -3/2,2")

    watson = sub.add_parser("watson", help="evaluate Watson's 3F2 closed form")
    watson.add_argument("--a", required=True)
    watson.add_argument("--b", required=True)
    watson.add_argument("--c", required=True)
    watson.add_argument("--reduce", choices=["w01"], default=None,
                        help="apply the one-step contiguous reduction first")
    return parser


def _cmd_prove(args) -> int:
    term = parse_summand(args.summand)
    support = Support.parse(args.lower, args.upper)
    found = zeilberger(term, max_order=args.max_order)
    if found is None:
        print(f"no recurrence of order <= {args.max_order} found",
              file=sys.stderr)
        return 1
    rec, cert = found
    first = rec.order
    check = range(first, first + 25)
    verified = verify_certificate(term, support, rec, cert, check)
    if args.json:
        print(json.dumps({
            "order": rec.order,
            "coeffs": [str(c) for c in rec.coeffs],
            "certificate": str(cert.R),
            "verified": verified,
        }, indent=2))
    else:
        print(f"recurrence (order {rec.order}):")
        print(f"  {rec}")
        print("certificate R(n,k):")
        print(f"  {cert.R}")
        print(f"verified: telescoping identity and sums over "
              f"n={check.start}..{check.stop - 1}: "
              f"{'pass' if verified else 'FAIL'}")
    return 0 if verified else 1


def _parse_range(text: str):
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise ParseError("expected A..B with integers", text, 0)
    return int(lo), int(hi)


def _cmd_verify(args) -> int:
    if args.corpus is None:
        source = resources.files("telescope") / "data" / "catalan_identities.toml"
        context = resources.as_file(source)
    else:
        import contextlib
        context = contextlib.nullcontext(args.corpus)
    override = _parse_range(args.range) if args.range else None
    options = CorpusOptions(range_override=override, jobs=args.jobs)
    with context as path:
        report = run_corpus(path, options)
    print(report.render_text())
    if args.report:
        write_report(report, args.report)
    return 0 if report.passed else 1


def _halfints(text: str, count: int, what: str) -> tuple:
    parts = text.split(",")
    if len(parts) != count:
        raise ParseError(f"expected {count} comma-separated {what} parameters",
                         text, 0)
    return tuple(HalfInt.parse(p.strip()) for p in parts)


def _cmd_eval3f2(args) -> int:
    spec = PFQSpec(upper=_halfints(args.upper, 3, "upper"),
                   lower=_halfints(args.lower, 2, "lower"))
    print(pfq_terminating(spec))
    return 0


def _cmd_watson(args) -> int:
    a, b, c = (HalfInt.parse(args.a), HalfInt.parse(args.b),
               HalfInt.parse(args.c))
    value = chu_w01(a, b, c) if args.reduce == "w01" else watson_w00(a, b, c)
    print(value)
    return 0


_COMMANDS = {"prove": _cmd_prove, "verify": _cmd_verify,
             "eval3f2": _cmd_eval3f2, "watson": _cmd_watson}


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(_merge_flag_values(list(argv)))
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _COMMANDS[args.command](args)
    except (GammaPoleError, SeriesError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, CorpusError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

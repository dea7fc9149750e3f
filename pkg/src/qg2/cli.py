"""Command-line front end ``qg2``.

    qg2 verify [--filter GLOB] [--jobs N] [--json PATH]
    qg2 nf EXPR [--params rs|swapped]
    qg2 pair FEXPR EEXPR
    qg2 table FWORD --format csv|json|text [--out PATH] [--diff]
    qg2 T i EXPR

``QG2_DEGREE_BOUND`` overrides the Serre completion bound.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from .free import F1, F2, format_ncpoly


def _fail(msg: str, code: int = 2) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def cmd_verify(args) -> int:
    from .checks import run_suite

    def show(res):
        line = f"{res.status.upper():4}  {res.check_id}  [{res.method}, {res.duration_ms} ms]"
        if res.status != "pass" and res.detail:
            line += f"  {res.detail}"
        print(line, flush=True)

    report = run_suite(args.filter, args.jobs, progress=None if args.quiet else show)
    if not report.results:
        print(f"warning: no check matches {args.filter!r}", file=sys.stderr)
    c = report.counts
    print(f"{c['pass']}/{c['total']} checks passed")
    if args.json:
        Path(args.json).write_text(report.to_json(timing=not args.no_timing))
    return 0 if report.ok else 1


def cmd_nf(args) -> int:
    from .parser import parse_poly
    from .rewrite import standard_rules
    rules = standard_rules(args.params)
    print(format_ncpoly(rules.straighten(parse_poly(args.expr))))
    return 0


def cmd_pair(args) -> int:
    from .pairing import pair
    from .parser import parse_poly
    print(pair(parse_poly(args.fexpr), parse_poly(args.eexpr)))
    return 0


def _parse_fword(text: str):
    from .parser import parse_poly
    poly = parse_poly(text)
    if len(poly.terms) != 1:
        raise ValueError(f"{text!r} is not a single word")
    (word, coeff), = poly.terms.items()
    if not coeff.is_one():
        raise ValueError(f"{text!r} has coefficient {coeff}")
    if sorted(word) != [F1, F1, F1, F1, F2]:
        raise ValueError(f"{text!r} does not have weight (-4,-1) in f1, f2")
    return word


def cmd_table(args) -> int:
    from .pairing import tabular_report
    word = _parse_fword(args.fword)
    rep = tabular_report(word)
    text = {"csv": rep.to_csv, "json": rep.to_json, "text": rep.to_text}[args.format]()
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.diff:
        from .checks import TABULAR_WORDS
        n = next((k for k, w in TABULAR_WORDS if w == word), None)
        if n is not None:
            from .pairing import fixture_diff
            lines = fixture_diff(rep, n)
            print("\n".join(lines) if lines else "computed rows equal the fixture", file=sys.stderr)
    return 0


def cmd_T(args) -> int:
    from .lusztig import lusztig_T
    from .parser import parse_poly
    if args.i not in (1, 2):
        return _fail("i must be 1 or 2")
    print(format_ncpoly(lusztig_T(args.i, parse_poly(args.expr))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qg2", description="Exact computations in U_{r,s}(G2).")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification registry")
    v.add_argument("--filter", default=None, help="glob over check ids")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", default=None, help="write the report here")
    v.add_argument("--no-timing", action="store_true", help="omit durations from the JSON")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("nf", help="normal form of an expression")
    n.add_argument("expr")
    n.add_argument("--params", choices=("rs", "swapped"), default="rs")
    n.set_defaults(func=cmd_nf)

    q = sub.add_parser("pair", help="skew pairing <FEXPR, EEXPR>")
    q.add_argument("fexpr")
    q.add_argument("eexpr")
    q.set_defaults(func=cmd_pair)

    t = sub.add_parser("table", help="5-fold coproduct table of an f-word of weight (-4,-1)")
    t.add_argument("fword")
    t.add_argument("--format", choices=("csv", "json", "text"), default="text")
    t.add_argument("--out", default=None)
    t.add_argument("--diff", action="store_true", help="diff against the checked-in fixture")
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("T", help="apply a Lusztig map")
    m.add_argument("i", type=int)
    m.add_argument("expr")
    m.set_defaults(func=cmd_T)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    from .parser import EvalError, ParseError
    from .pairing import PairingError
    from .rewrite import DegreeBoundError
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, EvalError, PairingError, DegreeBoundError, ValueError) as exc:
        return _fail(str(exc))
    except OSError as exc:
        return _fail(f"I/O: {exc}")


if __name__ == "__main__":
    sys.exit(main())

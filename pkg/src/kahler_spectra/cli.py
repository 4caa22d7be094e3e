"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 a ``verify`` check (or
``pairs --method both``) found a disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import classifier, cpn_spectrum, diophantine, patodi
from .exact_arith import format_rational, parse_rational

EXIT_OK, EXIT_USAGE, EXIT_DIFF = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _rat(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kahler-spectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    cl = sub.add_parser("classify", help="rigidity verdict for one (p, n)")
    cl.add_argument("-p", type=int, required=True)
    cl.add_argument("-n", type=int, required=True)
    cl.add_argument("--format", choices=["json", "table"], default="table")

    pr = sub.add_parser("pairs", help="exceptional (p, n) pairs")
    g = pr.add_mutually_exclusive_group(required=True)
    g.add_argument("--count", type=int)
    g.add_argument("--max-n", type=int)
    pr.add_argument("--method", choices=["recursion", "bruteforce", "both"], default="recursion")
    pr.add_argument("--format", choices=["json", "table"], default="table")

    co = sub.add_parser("coeffs", help="Patodi weights and heat invariants")
    co.add_argument("-p", type=int, required=True)
    co.add_argument("-n", type=int, required=True)
    co.add_argument("--c", type=_rat)
    co.add_argument("--vol", type=_rat)
    co.add_argument("--format", choices=["json", "table"], default="json")

    ve = sub.add_parser("verify", help="exhaustive exact checks")
    ve.add_argument("check", choices=["lastlemma", "duality", "a2a", "pairs"])
    ve.add_argument("--max-n", type=int, required=True)

    fi = sub.add_parser("cpn-fit", help="fit heat-trace asymptotics on CP^n(c)")
    fi.add_argument("-n", type=int, required=True)
    fi.add_argument("--c", type=_rat, required=True)
    fi.add_argument("--degree", type=int, default=4)
    fi.add_argument("--tmin", default="1e-3")
    fi.add_argument("--tmax", default="1e-2")
    fi.add_argument("--points", type=int, default=24)
    fi.add_argument("--digits", type=int, default=cpn_spectrum.DEFAULT_DIGITS)
    return parser


def _table(rows: list[dict], columns: list[str]) -> str:
    widths = [max(len(col), *(len(str(r[col])) for r in rows)) if rows else len(col) for col in columns]
    lines = ["  ".join(col.ljust(w) for col, w in zip(columns, widths))]
    for r in rows:
        lines.append("  ".join(str(r[col]).ljust(w) for col, w in zip(columns, widths)))
    return "\n".join(lines)


def cmd_classify(args, out) -> int:
    result = classifier.classify(args.p, args.n)
    data = result.to_json()
    if args.format == "json":
        print(dump_json(data), file=out)
        return EXIT_OK
    for key in ("p", "n", "degenerate", "numerical_ok", "q1_verdict", "q2_verdict",
                "theorem1_case", "requires_cohomological_einstein", "reduced_coeff"):
        print(f"{key:32s} {data[key]}", file=out)
    for key, val in data["lambdas"].items():
        print(f"{key:32s} {val}", file=out)
    if data["citation"]:
        print(f"{'citation':32s} {data['citation']}", file=out)
    for w in data["warnings"]:
        print(f"warning: {w}", file=out)
    return EXIT_OK


def cmd_pairs(args, out) -> int:
    if args.count is not None and args.count < 1:
        raise UsageError("--count must be positive")
    if args.max_n is not None and args.max_n < 1:
        raise UsageError("--max-n must be positive")

    status = EXIT_OK
    if args.method == "bruteforce":
        if args.max_n is None:
            # brute force needs a range; take it from the recursion
            limit = diophantine.enumerate_recursive(args.count)[-1].n
            pairs = diophantine.enumerate_bruteforce(limit)[: args.count]
        else:
            pairs = diophantine.enumerate_bruteforce(args.max_n)
    else:
        if args.count is not None:
            pairs = diophantine.enumerate_recursive(args.count)
        else:
            pairs = diophantine.pairs_up_to(args.max_n)
        if args.method == "both":
            limit = args.max_n if args.max_n is not None else pairs[-1].n
            brute = diophantine.enumerate_bruteforce(limit)
            if brute != pairs:
                status = EXIT_DIFF
                print(f"recursion and brute force disagree for n <= {limit}", file=sys.stderr)

    rows = [pr.to_json() for pr in pairs]
    if args.format == "json":
        print(dump_json({"method": args.method, "agree": status == EXIT_OK, "pairs": rows}), file=out)
    else:
        print(_table(rows, ["k", "p", "n"]), file=out)
    return status


def cmd_coeffs(args, out) -> int:
    lam = patodi.lambda_coefficients(args.p, args.n)
    holds, reduced, _ = patodi.numerical_condition(args.p, args.n)
    data = {
        "p": lam.p,
        "n": lam.n,
        "lambda1": format_rational(lam.lambda1),
        "lambda2": format_rational(lam.lambda2),
        "lambda3": format_rational(lam.lambda3),
        "reduced_coeff": format_rational(reduced),
        "numerical_condition": holds,
        "a1_coefficient": format_rational(patodi.a1_coefficient(args.p, args.n)),
    }
    if args.vol is not None:
        data["a0"] = format_rational(patodi.a0(args.p, args.n, args.vol))
        if args.c is not None:
            data["a2_const_hsc"] = format_rational(patodi.a2_const_hsc(args.p, args.n, args.c, args.vol))
    if args.format == "json":
        print(dump_json(data), file=out)
    else:
        for key, val in data.items():
            print(f"{key:20s} {val}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2")
    if args.check == "lastlemma":
        report = classifier.verify_lastlemma(args.max_n)
        data = report.to_json()
        data["check"] = "lastlemma"
        data["diff"] = [list(x) for x in report.diff]
        print(dump_json(data), file=out)
        return EXIT_DIFF if report.diff else EXIT_OK
    if args.check == "duality":
        bad = [list(x) for x in patodi.duality_violations(args.max_n)]
    elif args.check == "a2a":
        bad = [list(x) for x in patodi.reduction_violations(args.max_n)]
    else:
        rec = diophantine.pairs_up_to(args.max_n)
        brute = diophantine.enumerate_bruteforce(args.max_n)
        bad = [] if rec == brute else [
            {"recursion": [x.to_json() for x in rec], "bruteforce": [x.to_json() for x in brute]}
        ]
    print(dump_json({"check": args.check, "max_n": args.max_n, "violations": bad}), file=out)
    return EXIT_DIFF if bad else EXIT_OK


def cmd_cpn_fit(args, out) -> int:
    fit = cpn_spectrum.fit_asymptotics(
        args.n, args.c, degree=args.degree, t_min=args.tmin, t_max=args.tmax,
        grid_size=args.points, digits=args.digits,
    )
    print(dump_json(cpn_spectrum.fit_report(fit)), file=out)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "pairs": cmd_pairs,
    "coeffs": cmd_coeffs,
    "verify": cmd_verify,
    "cpn-fit": cmd_cpn_fit,
}


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError, cpn_spectrum.HeatTraceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

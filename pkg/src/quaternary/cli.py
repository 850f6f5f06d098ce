"""Command line front end.

Every command builds a RunReport; ``--json`` prints it verbatim, otherwise a
plain-text rendering of the same object is shown.  Exit status is 0 when the
report passes, 1 on a failed check and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .etatheta import ligozat_classify, parse_eta_spec, theta_product_quotient
from .formulas import rep_count
from .forms import parse_form
from .oracle import brute_table
from .qseries import DEFAULT_PRECISION
from .spaces import NotInSpaceError, classify_form, solve_in_basis, theta_product
from .verify import (
    SCOPES,
    CheckRecord,
    RunReport,
    bases_suite,
    classification_suite,
    default_jobs,
    identities_suite,
    run_scope,
)

METHODS = ("formula", "oracle", "series")


class UsageError(ValueError):
    pass


def parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"cannot parse n range {text!r}; use N or LO..HI") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad n range {text!r}")
    return lo, hi


def _form(text: str):
    try:
        return parse_form(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_compute(args) -> RunReport:
    form = _form(args.form)
    lo, hi = parse_range(args.n)
    methods = [m.strip() for m in args.method.split(",") if m.strip()]
    if not methods or len(methods) > 2 or any(m not in METHODS for m in methods):
        raise UsageError(f"--method takes one or two of {', '.join(METHODS)}")
    if "series" in methods and hi >= args.precision:
        raise UsageError(f"series method needs --precision of at least {hi + 1}")
    columns = {}
    for m in methods:
        if m == "formula":
            columns[m] = [rep_count(form, n) for n in range(lo, hi + 1)]
        elif m == "oracle":
            columns[m] = brute_table(form, hi)[lo:]
        else:
            s = theta_product(form, hi + 1)
            columns[m] = [int(s[n]) for n in range(lo, hi + 1)]
    rows = []
    report = RunReport("compute", {"form": str(form), "n": [lo, hi], "method": methods})
    for i, n in enumerate(range(lo, hi + 1)):
        row = {"n": n}
        row.update({m: columns[m][i] for m in methods})
        if len(methods) == 2:
            a, b = (columns[m][i] for m in methods)
            row["diff"] = a - b
            if a != b:
                report.details.append(CheckRecord(f"N{form.label} at n={n}", False, b, a, n))
        rows.append(row)
    if len(methods) == 2 and not report.details:
        report.details.append(CheckRecord(f"{methods[0]}={methods[1]} for {form.label}", True,
                                          checks=len(rows)))
    report.result = rows
    return report


def cmd_verify(args) -> RunReport:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    report = RunReport("verify", {"scope": args.scope, "max_n": args.max_n, "precision": args.precision})
    report.details = run_scope(args.scope, args.max_n, args.precision, args.jobs)
    return report


def cmd_solve(args) -> RunReport:
    form = _form(args.form)
    space = classify_form(form)
    report = RunReport("solve", {"form": str(form), "precision": args.precision})
    try:
        dec = solve_in_basis(theta_product(form, args.precision), space, form)
    except NotInSpaceError as exc:
        report.details.append(CheckRecord(f"decomposition of {form.label}", False,
                                          first_mismatch=exc.index, note=str(exc)))
        return report
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report.details.append(CheckRecord(f"decomposition of {form.label}", True, checks=dec.verified_to))
    report.result = dec.to_dict()
    return report


def cmd_classify(args) -> RunReport:
    form = _form(args.form)
    space = classify_form(form)
    lig = ligozat_classify(theta_product_quotient(form.coefficients, 40))
    report = RunReport("classify", {"form": str(form)})
    report.details = [CheckRecord(f"classify {form.label}", True)]
    report.result = {
        "form": str(form),
        "space": space.name,
        "character": str(space.character),
        "ligozat": lig.to_dict(),
    }
    return report


def cmd_ligozat(args) -> RunReport:
    try:
        eq = parse_eta_spec(args.eta, args.level)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    report = RunReport("ligozat", {"eta": str(eq), "level": args.level})
    report.details = [CheckRecord("ligozat", True)]
    report.result = ligozat_classify(eq).to_dict()
    return report


def cmd_bases(args) -> RunReport:
    report = RunReport("bases", {})
    report.details = bases_suite() + classification_suite()
    return report


def cmd_identities(args) -> RunReport:
    report = RunReport("identities", {"precision": args.precision})
    report.details = identities_suite(args.precision)
    return report


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    def default(v):
        return argparse.SUPPRESS if suppress else v

    p.add_argument("--precision", type=int, default=default(DEFAULT_PRECISION),
                   help=f"number of q-series terms to work with (default {DEFAULT_PRECISION})")
    p.add_argument("--json", action="store_true", default=default(False), help="print the JSON report")
    p.add_argument("--jobs", type=int, default=default(default_jobs()),
                   help="worker processes for independent checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quaternary",
        description="Representation numbers of the quaternary forms with coefficients 1, 2, 5, 10.",
    )
    _global_flags(parser, suppress=False)
    # the same flags after the subcommand; SUPPRESS keeps them from
    # clobbering values given before it
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="N(form; n) by formula, oracle or series")
    p.add_argument("--form", required=True)
    p.add_argument("--n", required=True, help="N or LO..HI")
    p.add_argument("--method", default="formula", help="one or two of formula,oracle,series")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common], help="run check suites")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--max-n", type=int, default=200)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[common], help="decompose a theta product in its basis")
    p.add_argument("--form", required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", parents=[common], help="modular space of a theta product")
    p.add_argument("--form", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("ligozat", parents=[common], help="Ligozat test for an eta quotient")
    p.add_argument("--eta", required=True, help="comma separated delta:exponent pairs")
    p.add_argument("--level", type=int, required=True)
    p.set_defaults(func=cmd_ligozat)

    p = sub.add_parser("bases", parents=[common], help="basis ranks and cusp form checks")
    p.set_defaults(func=cmd_bases)

    p = sub.add_parser("identities", parents=[common], help="identity suite")
    p.set_defaults(func=cmd_identities)
    return parser


def render_text(report: RunReport) -> str:
    lines = [f"{report.command}: {report.status.upper()} ({report.total_checks} checks)"]
    if report.error:
        lines.append(f"error: {report.error}")
    result = report.result
    if report.command == "compute" and result:
        keys = list(result[0])
        lines.append("  ".join(f"{k:>10}" for k in keys))
        lines += ["  ".join(f"{row[k]:>10}" for k in keys) for row in result]
    elif result is not None:
        lines.append(json.dumps(report.to_dict()["result"], indent=2))
    for d in report.details:
        if report.command in ("compute", "classify", "ligozat") and d.passed:
            continue
        mark = "ok  " if d.passed else "FAIL"
        line = f"  [{mark}] {d.name}"
        if not d.passed:
            line += f"  expected={d.expected} actual={d.actual} first_mismatch={d.first_mismatch}"
        lines.append(line)
        if d.note:
            lines.append(f"         note: {d.note}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.precision < 1:
        parser.error("--precision must be positive")
    try:
        report = args.func(args)
    except UsageError as exc:
        report = RunReport(args.command, {}, error=str(exc))
        _emit(report, args.json)
        return 2
    _emit(report, args.json)
    return 0 if report.status == "pass" else 1


def _emit(report: RunReport, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(render_text(report), file=sys.stdout if report.error is None else sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

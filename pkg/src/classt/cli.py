"""Command line interface.

Subcommands: classify, enumerate, build cyclic, build rdp, check,
birational, resolve, sweep; a corpus file of cases can be run with the
global --corpus flag.  Output is text (default), canonical JSON, or DOT
for the commands with a graph form; exit codes are 0 for success, 1 for
check failures and invalid inputs, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import reports
from .compactify import RootConfig
from .errors import BadInput, ClassTError

_DOTLESS = "this command has no graph form; use --format text or json"


def _add_common(parser: argparse.ArgumentParser, trailing: bool) -> None:
    # The same flags are registered on the main parser and, with
    # suppressed defaults, on every subparser, so they work in either
    # position on the command line.
    default = argparse.SUPPRESS if trailing else None
    parser.add_argument("--format", choices=("text", "json", "dot"),
                        default=default if trailing else "text",
                        help="output format (default text)")
    parser.add_argument("--seed", type=int, default=default if trailing else 0,
                        help="seed for sampling checks")
    parser.add_argument("--out", metavar="FILE", default=default,
                        help="write output to FILE instead of stdout")
    parser.add_argument("--corpus", metavar="FILE", default=default,
                        help="run the JSON-lines case file and report per-case results")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="classt",
        description=(
            "Exact-arithmetic toolkit for class T surface singularities and "
            "their compactified smoothings."
        ),
    )
    _add_common(p, trailing=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, trailing=True)
    sub = p.add_subparsers(dest="command", parser_class=argparse.ArgumentParser)

    classify = sub.add_parser("classify", parents=[common], help="normalize a quotient germ and test class T")
    classify.add_argument("--order", type=int, required=True)
    classify.add_argument("--weights", required=True, help="two weights, e.g. 1,5")

    enum = sub.add_parser("enumerate", parents=[common], help="enumerate weights (a, b) for fixed d, n, m, c")
    enum.add_argument("-d", type=int, required=True)
    enum.add_argument("-n", type=int, required=True)
    enum.add_argument("-m", type=int, required=True)
    enum.add_argument("-c", type=int, default=1)

    build = sub.add_parser("build", parents=[common], help="construct a compactified smoothing")
    build_sub = build.add_subparsers(dest="variant", required=True)
    bc = build_sub.add_parser("cyclic", parents=[common], help="cyclic variant from (d, n, m, c, a) and roots")
    bc.add_argument("-d", type=int, required=True)
    bc.add_argument("-n", type=int, required=True)
    bc.add_argument("-m", type=int, required=True)
    bc.add_argument("-c", type=int, default=1)
    bc.add_argument("-a", type=int, required=True)
    bc.add_argument("--roots", required=True, help='root:multiplicity list, e.g. "1:1,2:1"')
    br = build_sub.add_parser("rdp", parents=[common], help="D or E double point model")
    br.add_argument("--type", dest="ade", choices=("D", "E"), required=True)
    br.add_argument("--index", type=int, required=True)
    br.add_argument("--coeffs", help="deformation coefficients, e.g. 1/2,0,3")

    check = sub.add_parser("check", parents=[common], help="evaluate the metric existence hypotheses")
    check.add_argument("-d", type=int, required=True)
    check.add_argument("-n", type=int, required=True)
    check.add_argument("-m", type=int, required=True)
    check.add_argument("-c", type=int, default=1)
    check.add_argument("-a", type=int, required=True)
    check.add_argument("--roots", required=True)

    bir = sub.add_parser("birational", parents=[common], help="projection, blow-up at R2, roundtrip sampling")
    bir.add_argument("-d", type=int, required=True)
    bir.add_argument("-n", type=int, required=True)
    bir.add_argument("-m", type=int, required=True)
    bir.add_argument("-c", type=int, default=1)
    bir.add_argument("-a", type=int, required=True)
    bir.add_argument("--roots", required=True)

    res = sub.add_parser("resolve", parents=[common], help="minimal resolution chain of a quotient germ")
    res.add_argument("--order", type=int, required=True)
    res.add_argument("--weights", required=True)

    sweep = sub.add_parser("sweep", parents=[common], help="run the invariant suites over a parameter box")
    sweep.add_argument("--max-d", type=int, default=4)
    sweep.add_argument("--max-n", type=int, default=4)
    sweep.add_argument("--max-c", type=int, default=3)

    return p


def _parse_weights(text: str) -> tuple[int, int]:
    parts = [chunk.strip() for chunk in text.split(",")]
    if len(parts) != 2:
        raise BadInput(f"--weights takes two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise BadInput(f"cannot parse weights {text!r}") from exc


def _parse_coeffs(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [chunk.strip() for chunk in text.split(",")]


def _dispatch(args: argparse.Namespace) -> reports.CommandReport:
    if args.corpus:
        return reports.run_corpus(args.corpus, args.seed)
    cmd = args.command
    if cmd == "classify":
        return reports.classify_report(args.order, _parse_weights(args.weights))
    if cmd == "enumerate":
        return reports.enumerate_report(args.d, args.n, args.m, args.c)
    if cmd == "build":
        if args.variant == "cyclic":
            return reports.build_cyclic_report(
                args.d, args.n, args.m, args.c, args.a, RootConfig.parse(args.roots)
            )
        return reports.build_rdp_report(args.ade, args.index, _parse_coeffs(args.coeffs))
    if cmd == "check":
        return reports.check_report(
            args.d, args.n, args.m, args.c, args.a, RootConfig.parse(args.roots)
        )
    if cmd == "birational":
        return reports.birational_report(
            args.d, args.n, args.m, args.c, args.a,
            RootConfig.parse(args.roots), 25, args.seed,
        )
    if cmd == "resolve":
        return reports.resolve_report(args.order, _parse_weights(args.weights))
    if cmd == "sweep":
        return reports.sweep_report(args.max_d, args.max_n, args.max_c, args.seed)
    raise BadInput("a subcommand or --corpus is required")


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if not args.corpus and not args.command:
        parser.print_usage(sys.stderr)
        print("classt: error: a subcommand or --corpus is required", file=sys.stderr)
        return 2
    try:
        report = _dispatch(args)
        if args.format == "dot":
            if report.dot is None:
                raise BadInput(_DOTLESS)
            payload = report.dot
        elif args.format == "json":
            payload = reports.render_json(report.data)
        else:
            payload = reports.render_text(report.data)
    except ClassTError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(payload)
    return report.exit_code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

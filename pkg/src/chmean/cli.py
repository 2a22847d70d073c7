"""Command-line front end.

Subcommands: hmean (means of a distribution file), sweep2 (two-point weight
sweep to CSV/SVG/JSON, optionally with a matplotlib figure), verify (seeded
randomized theorem suites), lognormal (the complex-lognormal experiment).

Exit codes: 0 success, 1 input error, 2 degenerate mean, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import re
import sys
from contextlib import contextmanager

import numpy as np

from .core import (
    complex_json,
    distribution_from_json_dict,
    existence_certificate,
    expectation,
    harmonic_mean,
)
from .errors import ChMeanError, DegenerateMean, InvalidDistribution, InvalidSupport
from .estimates import SUITES, run_suites
from .montecarlo import ComplexNormalParams, lognormal_experiment, sample_complex_normal
from .sweeps import rows_to_json, two_point_sweep, write_csv, write_svg

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DEGENERATE = 2
EXIT_VERIFY = 3

SIGMA_CAP = 4.0  # heavier tails make desk-scale n insufficient


def parse_complex(text: str) -> complex:
    """Parse "a", "a+bi", "a-bi", "bi" (no whitespace allowed)."""
    s = text.strip()
    if not s or any(ch.isspace() for ch in s) or "j" in s or "J" in s:
        raise ValueError(f"invalid complex literal {text!r} (expected a+bi)")
    try:
        z = complex(s.replace("i", "j"))
    except ValueError as exc:
        raise ValueError(f"invalid complex literal {text!r} (expected a+bi)") from exc
    if not cmath.isfinite(z):
        raise ValueError(f"complex literal {text!r} is not finite")
    return z


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _uint_arg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # accept complex literals like -1-1i as positionals rather than flags
        self._negative_number_matcher = re.compile(r"^-(?=[\d.i])[\d.eE+i-]*$")

    # argparse exits 2 on bad usage by default; 2 means "degenerate mean" here
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10,
                        help="report tolerance (default 1e-10)")
    common.add_argument("--seed", type=_uint_arg, default=0,
                        help="root seed for anything randomized (default 0)")
    common.add_argument("--out", default="-",
                        help="output path, '-' for stdout (default)")
    common.add_argument("--format", choices=("csv", "svg", "json"), default="csv",
                        help="sweep output format (default csv)")

    parser = _Parser(
        prog="chmean",
        description="Harmonic means of non-zero complex random variables, "
                    "with geometric bound verification.",
        epilog="Complex arguments use the form a+bi (no whitespace), e.g. "
               "1+1i, -2.5i, 8.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_hmean = sub.add_parser("hmean", parents=[common],
                             help="compute E[Z], H[Z] and the existence certificate "
                                  "from a distribution JSON file")
    p_hmean.add_argument("file", help="JSON file: {\"atoms\": [{\"re\",\"im\",\"w\"}, ...]}")
    p_hmean.add_argument("--c", type=_complex_arg, default=1 + 0j, metavar="A+BI",
                         help="certificate direction (default 1)")
    p_hmean.set_defaults(func=cmd_hmean)

    p_sweep = sub.add_parser("sweep2", parents=[common],
                             help="sweep the two-point weight and emit the locus data")
    p_sweep.add_argument("c1", type=_complex_arg, help="first atom (a+bi)")
    p_sweep.add_argument("c2", type=_complex_arg, help="second atom (a+bi)")
    p_sweep.add_argument("--steps", type=int, default=11,
                         help="grid size; theta = k/(steps-1) (default 11)")
    p_sweep.add_argument("--plot", metavar="PATH",
                         help="also render a matplotlib figure to PATH")
    p_sweep.set_defaults(func=cmd_sweep2)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run randomized theorem suites")
    p_verify.add_argument("suite", nargs="?", default="all",
                          choices=sorted(SUITES) + ["all"],
                          help="which suite (default all)")
    p_verify.add_argument("--cases", type=int, default=1000,
                          help="cases per suite (default 1000)")
    p_verify.set_defaults(func=cmd_verify)

    p_logn = sub.add_parser("lognormal", parents=[common],
                            help="estimate E[exp Z] and H[exp Z] for Z ~ CN(mu, sigma)")
    p_logn.add_argument("mu", type=_complex_arg, help="mean of Z (a+bi)")
    p_logn.add_argument("sigma", type=float, help="variance of Z, in (0, 4]")
    p_logn.add_argument("-n", "--samples", type=int, default=1_000_000,
                        help="number of draws (default 1e6)")
    p_logn.add_argument("--plot", metavar="PATH",
                        help="also render a matplotlib figure to PATH")
    p_logn.set_defaults(func=cmd_lognormal)
    return parser


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def cmd_hmean(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        print(f"chmean: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:
        print(f"chmean: {args.file} is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_INPUT
    dist = distribution_from_json_dict(data)
    cert = existence_certificate(dist, args.c)
    e = expectation(dist)
    out = {
        "expectation": complex_json(e),
        "harmonic_mean": None,
        "abs_harmonic_mean": None,
        "certificate": {"c": complex_json(args.c), **cert.to_json_dict()},
    }
    code = EXIT_OK
    try:
        h = harmonic_mean(dist)
        out["harmonic_mean"] = complex_json(h)
        out["abs_harmonic_mean"] = abs(h)
    except DegenerateMean as exc:
        print(f"chmean: {exc}", file=sys.stderr)
        code = EXIT_DEGENERATE
    with _open_out(args.out) as fh:
        json.dump(out, fh, indent=2)
        fh.write("\n")
    return code


def cmd_sweep2(args) -> int:
    if args.c1 == 0 or args.c2 == 0:
        print("chmean: atoms must be non-zero", file=sys.stderr)
        return EXIT_INPUT
    if args.c1 == args.c2:
        print("chmean: atoms must be distinct", file=sys.stderr)
        return EXIT_INPUT
    if args.steps < 2:
        print("chmean: --steps must be at least 2", file=sys.stderr)
        return EXIT_INPUT
    rows, locus = two_point_sweep(args.c1, args.c2, args.steps)
    if locus.kind == "degenerate":
        print("chmean: degenerate locus (0 lies between the collinear atoms); "
              "no bounded locus, locus_dist left empty", file=sys.stderr)
    with _open_out(args.out) as fh:
        if args.format == "csv":
            write_csv(rows, fh)
        elif args.format == "svg":
            write_svg(rows, locus, args.c1, args.c2, fh)
        else:
            json.dump(rows_to_json(rows), fh, indent=2)
            fh.write("\n")
    if args.plot:
        from .figures import render_sweep

        render_sweep(rows, locus, args.c1, args.c2, args.plot)
    if any(row.degenerate for row in rows):
        print("chmean: degenerate mean on the theta grid (sentinel rows emitted)",
              file=sys.stderr)
        return EXIT_DEGENERATE
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.cases < 1:
        print("chmean: --cases must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    if args.tol < 0:
        print("chmean: --tol must be nonnegative", file=sys.stderr)
        return EXIT_INPUT
    results = run_suites(args.suite, args.cases, args.seed, args.tol)
    with _open_out(args.out) as fh:
        if args.format == "json":
            json.dump([r.to_json_dict() for r in results], fh, indent=2)
            fh.write("\n")
        else:
            for r in results:
                worst = "n/a" if math.isinf(r.worst_slack) else f"{r.worst_slack:.6e}"
                fh.write(f"{r.suite}: cases={r.cases} passed={r.passed} "
                         f"failed={r.failed} refused={r.refused} "
                         f"worst_slack={worst} seed={r.seed}\n")
    failed = [r for r in results if not r.ok]
    if failed:
        for r in failed:
            print(f"chmean: suite {r.suite} failed {r.failed} case(s); "
                  "first failure follows for replay", file=sys.stderr)
            print(json.dumps(r.failures[0], indent=2), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_lognormal(args) -> int:
    if not 0.0 < args.sigma <= SIGMA_CAP:
        print(f"chmean: sigma must lie in (0, {SIGMA_CAP}]", file=sys.stderr)
        return EXIT_INPUT
    if args.samples < 1:
        print("chmean: -n must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    params = ComplexNormalParams(args.mu, args.sigma)
    result = lognormal_experiment(params, args.samples, args.seed)
    with _open_out(args.out) as fh:
        json.dump(result.to_json_dict(), fh, indent=2)
        fh.write("\n")
    if args.plot:
        from .figures import render_lognormal

        draws = sample_complex_normal(params, min(args.samples, 4000), args.seed)
        render_lognormal(result, np.exp(draws.samples), args.plot)
    budget = 10.0 * result.se_estimate
    if result.err_arith > budget or result.err_harm > budget:
        print(f"chmean: estimate deviates from e^mu by more than 10*se "
              f"({result.err_arith:.3e}, {result.err_harm:.3e} vs {budget:.3e})",
              file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidDistribution, InvalidSupport, ValueError) as exc:
        print(f"chmean: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DegenerateMean as exc:
        print(f"chmean: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ChMeanError as exc:
        print(f"chmean: verification error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())

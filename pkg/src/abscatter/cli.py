"""Command-line entry point: ``abscatter``.

Exit status: 0 success, 1 usage error, 2 numerical-check failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .checks import SUITES, run_checks
from .errors import ParameterError
from .sweep import ROUTES, SweepSpec, format_csv, format_json, run_sweep

EXIT_OK, EXIT_USAGE, EXIT_CHECK_FAILED, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _theta0_range(text):
    try:
        lo, hi, n = text.split(":")
        return float(lo), float(hi), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI:N, got {text!r}")


def _check_list(text):
    names = [t.strip() for t in text.split(",") if t.strip()]
    bad = [t for t in names if t not in SUITES]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown check(s) {bad}; choose from {', '.join(SUITES)}")
    return names


def build_parser():
    p = _Parser(
        prog="abscatter",
        description="Tabulate 2*pi*|S|^2 for Aharonov-Bohm scattering with general boundary "
        "conditions, or run the numerical identity checks.",
    )
    p.add_argument("--preset", choices=("fig1", "fig2", "fig3"), help="parameter sets of the three reference figures")
    p.add_argument("--alpha", type=float, help="reduced flux in (0, 1) (default 0.5)")
    t0 = p.add_mutually_exclusive_group()
    t0.add_argument("--theta0", type=float, help="incident direction in radians (default 0)")
    t0.add_argument("--theta0-range", type=_theta0_range, metavar="LO:HI:N",
                    help="sweep the incident direction; emits a (Theta, theta0) surface")
    p.add_argument("--u", type=float)
    p.add_argument("--v", type=float)
    p.add_argument("--w-re", type=float)
    p.add_argument("--w-im", type=float)
    p.add_argument("--k", type=float, default=1.0, help="wavenumber (default 1)")
    p.add_argument("--physical", action="store_true",
                   help="read --u/--v/--w-* as the primed boundary parameters and rescale at --k")
    p.add_argument("--n-theta", type=int, default=1024, help="Theta cells per period (default 1024)")
    p.add_argument("--exclusion", type=float, default=1e-3,
                   help="half-width of the excluded forward window around Theta = +-pi (default 1e-3)")
    p.add_argument("--route", choices=ROUTES, default="general",
                   help="evaluate via the condensed formula or via the scattering matrix")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", help="output path (default stdout)")
    p.add_argument("--check", type=_check_list, action="append", metavar="{eq13,eq19,oracle,symmetry}",
                   help="run identity checks instead of a sweep; repeatable or comma-separated")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, help="trials per check suite (default: per-suite)")
    return p


def _spec_from_args(args) -> SweepSpec:
    custom = [args.u, args.v, args.w_re, args.w_im]
    if args.preset:
        if any(x is not None for x in custom) or args.physical or args.alpha is not None:
            raise UsageError("--preset fixes the parameters; do not combine it with --u/--v/--w-*/--alpha/--physical")
        if args.theta0 is not None or (args.theta0_range is not None and args.preset != "fig3"):
            raise UsageError(f"preset {args.preset} fixes theta0")
    u, v, w_re, w_im = (0.0 if x is None else x for x in custom)
    return SweepSpec(
        preset=args.preset or "custom",
        alpha=0.5 if args.alpha is None else args.alpha,
        theta0=0.0 if args.theta0 is None else args.theta0,
        theta0_range=args.theta0_range,
        u=u,
        v=v,
        w=complex(w_re, w_im),
        k=args.k,
        physical=args.physical,
        n_theta=args.n_theta,
        exclusion=args.exclusion,
        route=args.route,
    )


def _emit(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.check:
            if args.preset:
                raise UsageError("--check and --preset are mutually exclusive")
            if args.trials is not None and args.trials < 1:
                raise UsageError("--trials must be >= 1")
            selection = {name for group in args.check for name in group}
            report = run_checks(selection, seed=args.seed, trials=args.trials)
            _emit(json.dumps(report, indent=1) + "\n", args.output)
            return EXIT_OK if report["passed"] else EXIT_CHECK_FAILED
        result = run_sweep(_spec_from_args(args))
        text = format_json(result) if args.format == "json" else format_csv(result)
        _emit(text, args.output)
    except (UsageError, ParameterError) as exc:
        print(f"abscatter: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"abscatter: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

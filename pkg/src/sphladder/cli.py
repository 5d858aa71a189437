"""``sphladder`` command line: ``verify``, ``generate`` and ``table``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .harmonics import IndexOutOfRange, closed_form
from .render import TABLE_FAMILIES, UnknownFamily, coefficient_table, render_exact, render_grid, render_latex
from .verify import SUITES, SuiteConfig, run_suite


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    config = SuiteConfig(
        suite=args.suite,
        l_max=args.lmax,
        d_max=args.dmax,
        s_max=args.smax,
        random_trials=args.trials,
        seed=args.seed,
        numeric_tolerance=args.tol,
    )
    report = run_suite(config)
    _emit(report.dumps() if args.format == "json" else report.to_csv(), args.out)
    s = report.summary
    print(f"pass={s['pass']} fail={s['fail']} flagged={s['flagged']}", file=sys.stderr)
    for r in report.records:
        if r.status != "pass":
            params = ",".join(f"{k}={v}" for k, v in r.params)
            print(f"  {r.status}: {r.identity_id}({params}) {r.note}", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_generate(args: argparse.Namespace) -> int:
    f = closed_form(args.l, args.m)
    if args.form == "exact":
        text = render_exact(f) + "\n"
    elif args.form == "latex":
        text = render_latex(f) + "\n"
    else:
        text = render_grid(f, args.ntheta, args.nphi)
    sys.stdout.write(text)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    sys.stdout.write(coefficient_table(args.family, args.lmax))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sphladder", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity suites and emit a report")
    v.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    v.add_argument("--lmax", type=int, default=8)
    v.add_argument("--dmax", type=int, default=9)
    v.add_argument("--smax", type=int, default=9)
    v.add_argument("--trials", type=int, default=20, help="random smooth functions per identity")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=float, default=1e-10, help="tolerance for quadrature cross-checks")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", help="print one harmonic Y_l^m")
    g.add_argument("--l", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--form", choices=("exact", "latex", "numeric-grid"), default="exact")
    g.add_argument("--ntheta", type=int, default=9, help="grid points in theta, poles included")
    g.add_argument("--nphi", type=int, default=8, help="grid points in phi")
    g.set_defaults(func=cmd_generate)

    t = sub.add_parser("table", help="CSV of one-step ladder coefficients")
    t.add_argument("--family", required=True, help="one of " + ", ".join(TABLE_FAMILIES))
    t.add_argument("--lmax", type=int, default=4)
    t.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (IndexOutOfRange, UnknownFamily, ValueError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"sphladder {args.command}: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

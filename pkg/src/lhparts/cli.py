"""Command-line surface: maps, theorem checks, worked-example golden
reproductions, generating functions and diagram rendering.

Exit codes: 0 on success/pass, 1 on verification failure, 2 on usage
errors (including malformed partitions and class violations).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classes, core, maps, series, verify
from .classes import ClassSpec
from .errors import LhpartsError


def _parse_parts(text: str):
    try:
        values = [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise LhpartsError(f"cannot parse parts {text!r}")
    return core.make_partition(values)


def _fmt(lam) -> str:
    return ",".join(str(p) for p in lam) if lam else "(empty)"


def _emit_report(report, args) -> None:
    if args.format == "jsonl":
        for rec in report.to_records():
            print(json.dumps(rec))
    else:
        print(report.to_text())
    if getattr(args, "report_dir", None):
        outdir = Path(args.report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        stem = report.theorem.replace(".", "_").replace(" ", "_")
        with open(outdir / f"{stem}.jsonl", "w") as fh:
            for rec in report.to_records():
                fh.write(json.dumps(rec) + "\n")
        from .plots import save_report_figure
        save_report_figure(report, outdir / f"{stem}.png")


def _cmd_map(args) -> int:
    lam = _parse_parts(args.parts)
    trace: list | None = [] if args.trace else None
    if args.kind == "sk":
        out = maps.stockhofe_keith(lam, args.m, trace=trace)
    elif args.kind == "phin":
        if args.c is None or args.n is None:
            raise LhpartsError("map phin requires --c and --n")
        out = maps.phi_n(lam, args.m, args.c, args.n, trace=trace)
    elif args.kind == "composite":
        if args.n is None:
            raise LhpartsError("map composite requires --n")
        out = maps.composite_phi_n(lam, args.m, args.n, c=args.c, trace=trace)
    else:  # inverse
        if args.n is None:
            raise LhpartsError("map inverse requires --n")
        out = maps.composite_inverse(lam, args.m, args.n, c=args.c, trace=trace)
    if trace:
        for label, value in trace:
            print(f"# {label}: {_fmt(value)}")
    if args.format == "jsonl":
        print(json.dumps({"map": args.kind, "input": list(lam),
                          "output": list(out)}))
    else:
        print(_fmt(out))
    return 0


def _cmd_check(args) -> int:
    report = verify.check_theorem(args.theorem, m=args.m, c=args.c, n=args.n,
                                  max_weight=args.max_weight, jobs=args.jobs)
    _emit_report(report, args)
    return 0 if report.passed else 1


def _cmd_table1(args) -> int:
    report = verify.reproduce_table1()
    _emit_report(report, args)
    if args.format != "jsonl":
        for lam, mu in verify.TABLE1:
            print(f"{_fmt(lam)} -> {_fmt(mu)}")
    return 0 if report.passed else 1


def _cmd_figures(args) -> int:
    report = verify.reproduce_figures()
    _emit_report(report, args)
    return 0 if report.passed else 1


def _cmd_gf(args) -> int:
    if args.which == "rhs":
        s = series.gf_falling_rhs(args.m, args.n, args.z_mode, args.max_degree)
    else:
        spec = ClassSpec(args.kind, m=args.m, c=args.c, n=args.n).validate()
        s = series.class_generating_function(spec, args.stat, args.max_degree)
    print(s.to_text())
    return 0


def _cmd_show(args) -> int:
    lam = _parse_parts(args.parts)
    text = core.render_modular_ferrers(lam, args.m)
    if text:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lhparts",
        description="Exact toolkit for lecture hall theorems on m-falling "
                    "partitions: statistics, bijections, q-series and an "
                    "enumeration-based verification harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="apply a bijection to a partition")
    p.add_argument("kind", choices=("sk", "phin", "composite", "inverse"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--parts", required=True,
                   help="comma-separated parts, e.g. 5,5,4,4,4")
    p.add_argument("--trace", action="store_true",
                   help="print intermediate states")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("check", help="run a theorem verification")
    p.add_argument("theorem", choices=verify.THEOREMS)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--report-dir", default=None,
                   help="write the jsonl report and a PNG figure here")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("table1", help="reproduce the 21-row golden table")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--report-dir", default=None)
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("figures", help="replay the worked figure examples")
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.add_argument("--report-dir", default=None)
    p.set_defaults(func=_cmd_figures)

    p = sub.add_parser("gf", help="print a generating function")
    p.add_argument("which", choices=("class", "rhs"))
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--kind", choices=classes.KINDS, default="O_m_falling_n",
                   help="class to enumerate (for 'class')")
    p.add_argument("--stat", choices=series.SELECTORS, default="l-type")
    p.add_argument("--z-mode", choices=("multi", "single"), default="single")
    p.add_argument("--max-degree", type=int, default=15)
    p.set_defaults(func=_cmd_gf)

    p = sub.add_parser("show", help="render a diagram")
    p.add_argument("what", choices=("ferrers",))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--parts", required=True)
    p.set_defaults(func=_cmd_show)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LhpartsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

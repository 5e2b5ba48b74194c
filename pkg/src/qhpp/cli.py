"""Command-line front end.

Subcommands: analyze (full pipeline to JSON), catalog (quintic family
list), census (three-root-family portrait counts), plot (streamline
export), oracle-check (numeric probes against the exact classification).

Exit codes: 0 success, 2 parse error, 3 not quasi-homogeneous, 4 common
factor, 5 unsupported degree, 6 bad window.  The QHPP_TOL environment
variable overrides the oracle tolerance wherever a --tol flag is not
given explicitly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import quintic_catalog
from .errors import (
    BadWindowError,
    CommonFactorError,
    NotQuasiHomogeneousError,
    ParseError,
    QhppError,
    UnsupportedDegreeError,
)
from .oracle import TOL_MAX, TOL_MIN, Window, streamlines, streamlines_csv, streamlines_svg
from .parsing import parse_system_file
from .report import analyze, report_dict, to_json
from .x111 import x111_census

_EXIT_CODES = (
    (ParseError, 2),
    (NotQuasiHomogeneousError, 3),
    (CommonFactorError, 4),
    (UnsupportedDegreeError, 5),
    (BadWindowError, 6),
)

_DEFAULT_TOL = 1e-10


def _tol_value(text: str) -> float:
    try:
        tol = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (TOL_MIN <= tol <= TOL_MAX):
        raise argparse.ArgumentTypeError(f"tol {tol} outside [{TOL_MIN}, {TOL_MAX}]")
    return tol


def _env_tol() -> float:
    raw = os.environ.get("QHPP_TOL")
    if raw is None:
        return _DEFAULT_TOL
    try:
        return _tol_value(raw)
    except argparse.ArgumentTypeError as exc:
        raise ParseError(f"QHPP_TOL: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_analyze(args) -> int:
    system = parse_system_file(args.file)
    tol = args.tol if args.tol is not None else _env_tol()
    report = analyze(system, with_oracle=args.oracle, tol=tol)
    _emit(to_json(report), args.out)
    return 0


def _cmd_catalog(args) -> int:
    if args.degree != 5:
        raise UnsupportedDegreeError(f"only degree 5 is catalogued, not {args.degree}")
    entries = []
    for fam in quintic_catalog():
        entries.append(
            {
                "name": fam.name,
                "p": fam.p,
                "varsigma": fam.varsigma,
                "kappa": fam.kappa,
                "weight": {"s1": fam.weight.s1, "s2": fam.weight.s2, "d": fam.weight.d},
                "p_support": [list(ij) for ij in fam.p_support],
                "q_support": [list(ij) for ij in fam.q_support],
                "nonzero": list(fam.condition),
            }
        )
    _emit(_json_text({"degree": args.degree, "families": entries}), args.out)
    return 0


def _cmd_census(args) -> int:
    counts = x111_census()
    _emit(
        _json_text(
            {
                "a14>1": counts[">1"],
                "a14<1": counts["<1"],
                "a14=1": counts["=1"],
                "total": counts["total"],
            }
        ),
        args.out,
    )
    return 0


def _cmd_plot(args) -> int:
    system = parse_system_file(args.file)
    window = Window.parse(args.window)
    tol = args.tol if args.tol is not None else min(_env_tol(), 1e-8)
    trajectories = streamlines(system, window, args.streamlines, tol=tol)
    if args.format == "csv":
        _emit(streamlines_csv(trajectories), args.out)
    else:
        _emit(streamlines_svg(trajectories, window), args.out)
    return 0


def _cmd_oracle_check(args) -> int:
    system = parse_system_file(args.file)
    tol = args.tol if args.tol is not None else _env_tol()
    report = analyze(system, with_oracle=True, tol=tol)
    payload = report_dict(report)
    _emit(
        _json_text(
            {
                "input": payload["input"],
                "image": payload["image"],
                "oracle": payload["oracle"],
                "warnings": payload["warnings"],
            }
        ),
        args.out,
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhpp",
        description="Exact classification of planar quasi-homogeneous polynomial systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full pipeline report as JSON")
    p.add_argument("file", help="system file (dx/dt = ... / dy/dt = ... lines)")
    p.add_argument("--out", help="write to this path instead of stdout")
    p.add_argument("--oracle", action="store_true", help="run numeric direction probes")
    p.add_argument("--tol", type=_tol_value, help="oracle tolerance")
    p.set_defaults(run=_cmd_analyze)

    p = sub.add_parser("catalog", help="quasi-homogeneous family catalog")
    p.add_argument("--degree", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_catalog)

    p = sub.add_parser("census", help="portrait counts of the three-root quintic family")
    p.add_argument("--out")
    p.set_defaults(run=_cmd_census)

    p = sub.add_parser("plot", help="streamline export (csv or svg)")
    p.add_argument("file")
    p.add_argument("--window", default="-2:2,-2:2", help="xmin:xmax,ymin:ymax")
    p.add_argument("--streamlines", type=int, default=64, metavar="N")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--tol", type=_tol_value)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_plot)

    p = sub.add_parser("oracle-check", help="probe directions numerically and compare")
    p.add_argument("file")
    p.add_argument("--tol", type=_tol_value)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_oracle_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QhppError as exc:
        for cls, code in _EXIT_CODES:
            if isinstance(exc, cls):
                print(f"error: {exc}", file=sys.stderr)
                return code
        raise


if __name__ == "__main__":
    raise SystemExit(main())

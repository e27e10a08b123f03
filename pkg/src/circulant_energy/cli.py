"""Command-line front end.

Every subcommand writes a table of records as csv, json or plain text.
Exit codes: 0 ok, 1 I/O failure, 2 bad arguments or (r, N) outside the
family, 3 dense-oracle failure, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .asymptotics import InternalConsistencyError, asymptotic_report
from .energy import EnergyReport, Method, closed_method, energy, energy_direct
from .oracle import DEFAULT_ORACLE_CAP, OracleError, energy_oracle
from .scan import DEFAULT_TOL, convergence_table, scan_range, summarize
from .spectrum import DomainError, GraphSpec, full_spectrum

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_ORACLE = 3
EXIT_INVARIANT = 4

SCAN_CAP = 10_000

SPECTRUM_FIELDS = ("k", "eigenvalue")
ENERGY_FIELDS = ("r", "N", "energy", "method", "ratio")
SCAN_FIELDS = ("r", "N", "energy", "threshold", "margin", "classification")
SERIES_FIELDS = ("N", "ratio", "deviation")
ASYMPTOTIC_FIELDS = (
    "r",
    "ir_quadrature",
    "ir_double_sum",
    "ir_closed",
    "lebesgue",
    "lower_bound_log",
    "bound_lower",
    "bound_upper",
)


@dataclass(frozen=True)
class Figure:
    r: int
    n_min: int
    n_max: int
    y_min: float
    y_max: float


FIGURES = {
    "fig2_left": Figure(1, 100, 300, 1.277, 1.287),
    "fig2_right": Figure(2, 100, 300, 1.659, 1.672),
    "fig3_left": Figure(3, 7, 60, 1.6, 2.2),
    "fig3_right": Figure(4, 9, 300, 1.77, 2.26),
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _num(x: float) -> float:
    # 15 significant digits survive a text round trip unchanged
    return float(format(x, ".15g"))


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return format(value, ".15g")
    return str(value)


def render(records: Sequence[dict], fields: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{f: rec[f] for f in fields} for rec in records], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for rec in records:
            writer.writerow([_cell(rec[f]) for f in fields])
        return buf.getvalue()
    rows = [list(fields)] + [[_cell(rec[f]) for f in fields] for rec in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(fields))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in rows
    )


def parse_records(text: str, fmt: str) -> list[dict]:
    """Inverse of :func:`render` for csv and json output."""
    if fmt == "json":
        return json.loads(text)
    if fmt != "csv":
        raise ValueError(f"cannot parse format {fmt!r}")
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rec: dict[str, Any] = {}
        for key, cell in row.items():
            try:
                rec[key] = int(cell)
            except ValueError:
                try:
                    rec[key] = float(cell)
                except ValueError:
                    rec[key] = cell
        out.append(rec)
    return out


def write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    try:
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.", suffix=".tmp")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from exc
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except OSError as exc:
        Path(tmp).unlink(missing_ok=True)
        raise CliError(f"cannot write {path}: {exc}", EXIT_IO) from exc


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _spec(args) -> GraphSpec:
    try:
        return GraphSpec(args.r, args.N)
    except DomainError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc


def _energy_record(rep: EnergyReport) -> dict:
    return {
        "r": rep.spec.r,
        "N": rep.spec.N,
        "energy": _num(rep.energy),
        "method": str(rep.method),
        "ratio": _num(rep.ratio),
    }


def cmd_spectrum(args) -> int:
    spec = _spec(args)
    values = full_spectrum(spec).values
    records = [{"k": k, "eigenvalue": _num(v)} for k, v in enumerate(values)]
    write_output(render(records, SPECTRUM_FIELDS, args.format), args.output)
    return EXIT_OK


def cmd_energy(args) -> int:
    spec = _spec(args)
    if args.method == "auto":
        rep = energy(spec)
    elif args.method == "direct":
        rep = energy_direct(spec)
    elif args.method == "closed":
        if closed_method(spec) is None:
            raise CliError(f"no closed form for G({spec.r}, {spec.N}); use auto or direct", EXIT_USAGE)
        rep = energy(spec)
    else:
        try:
            rep = EnergyReport(spec, energy_oracle(spec, cap=args.oracle_cap), Method.ORACLE)
        except OracleError as exc:
            raise CliError(f"oracle failed: {exc}", EXIT_ORACLE) from exc
    write_output(render([_energy_record(rep)], ENERGY_FIELDS, args.format), args.output)
    return EXIT_OK


def cmd_asymptotic(args) -> int:
    if args.r < 1:
        raise CliError(f"r must be >= 1, got {args.r}", EXIT_USAGE)
    try:
        rep = asymptotic_report(args.r)
    except InternalConsistencyError as exc:
        raise CliError(str(exc), EXIT_INVARIANT) from exc
    lo, hi = rep.bound_interval
    record = {
        "r": rep.r,
        "ir_quadrature": _num(rep.ir_quadrature),
        "ir_double_sum": _num(rep.ir_double_sum),
        "ir_closed": _num(rep.ir_closed),
        "lebesgue": _num(rep.lebesgue),
        "lower_bound_log": _num(rep.lower_bound_log),
        "bound_lower": _num(lo),
        "bound_upper": _num(hi),
    }
    write_output(render([record], ASYMPTOTIC_FIELDS, args.format), args.output)
    return EXIT_OK


def cmd_scan(args) -> int:
    r, n_min, n_max = args.r, args.min, args.max
    if r < 1:
        raise CliError(f"r must be >= 1, got {r}", EXIT_USAGE)
    if max(n_min, 2 * r + 1) > n_max:
        raise CliError(f"empty range: need max(min, 2r+1)={max(n_min, 2 * r + 1)} <= max={n_max}", EXIT_USAGE)
    if n_max > SCAN_CAP and not args.no_cap:
        raise CliError(f"--max above {SCAN_CAP} needs --no-cap", EXIT_USAGE)
    if not args.tol > 0:
        raise CliError("--tol must be positive", EXIT_USAGE)
    records = scan_range(r, n_min, n_max, args.tol, workers=args.workers)
    summary = summarize(records, r, n_min, n_max, args.tol)
    shown = [rec for rec in records if rec.is_hyperenergetic] if args.only_hyper else records
    rows = [
        {
            "r": rec.spec.r,
            "N": rec.spec.N,
            "energy": _num(rec.energy),
            "threshold": _num(rec.threshold),
            "margin": _num(rec.margin),
            "classification": str(rec.classification),
        }
        for rec in shown
    ]
    footer = (
        f"# scanned r={r} N=[{max(n_min, 2 * r + 1)},{n_max}] tol={args.tol:g}: "
        f"hyperenergetic={summary.hyperenergetic} "
        f"non_hyperenergetic={summary.non_hyperenergetic} boundary={summary.boundary} "
        f"(no claim beyond N={n_max})\n"
    )
    text = render(rows, SCAN_FIELDS, args.format)
    if args.format == "plain":
        text += footer
    else:
        _note(footer.rstrip())
    write_output(text, args.output)
    return EXIT_OK


def figure_series(figure_id: str) -> tuple[Figure, list[dict]]:
    fig = FIGURES[figure_id]
    rows = convergence_table(fig.r, range(fig.n_min, fig.n_max + 1))
    return fig, [{"N": n, "ratio": _num(q), "deviation": _num(dev)} for n, q, dev in rows]


def cmd_figure_data(args) -> int:
    if args.figure not in FIGURES:
        raise CliError(
            f"unknown figure {args.figure!r}; choose from {', '.join(FIGURES)}", EXIT_USAGE
        )
    fig, records = figure_series(args.figure)
    meta = (
        f"# {args.figure}: y = E({fig.r},N)/(N-1), x = N in [{fig.n_min},{fig.n_max}], "
        f"y axis [{fig.y_min},{fig.y_max}], reference line y = 2\n"
    )
    text = render(records, SERIES_FIELDS, args.format)
    if args.format == "plain":
        text = meta + text
    else:
        _note(meta.rstrip())
    write_output(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circulant-energy",
        description="Spectra, energies and hyperenergetic scans for circulant graphs G(r, N).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="plain"):
        p.add_argument("--format", choices=("csv", "json", "plain"), default=fmt_default)
        p.add_argument("-o", "--output", default=None, help="write here (atomically) instead of stdout")

    p = sub.add_parser("spectrum", help="eigenvalues of G(r, N)")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", help="energy of G(r, N)")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--method", choices=("auto", "direct", "closed", "oracle"), default="auto")
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP)
    common(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("asymptotic", help="limit coefficient I_r and its bounds")
    p.add_argument("-r", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_asymptotic)

    p = sub.add_parser("scan", help="classify G(r, N) over a range of N")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--only-hyper", action="store_true", help="emit only hyperenergetic rows")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--no-cap", action="store_true", help=f"allow --max above {SCAN_CAP}")
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("figure-data", help="(N, ratio) series behind the energy-ratio figures")
    p.add_argument("figure", help=", ".join(FIGURES))
    common(p, fmt_default="csv")
    p.set_defaults(func=cmd_figure_data)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _note(f"error: {exc}")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())

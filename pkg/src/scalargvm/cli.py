"""Command-line front end.

    scalargvm shape --seq 5,4,1,3,2,6 [--oracle]
    scalargvm gkdim --type B --rank 3 (--p 1 --z -1/2 | --weight 7/4,3/4,1/4)
    scalargvm reduce --type B --rank 4 --p 2 --z -1
    scalargvm scan --type B --rank 4 --p 2 --class 0 --from -6 --to 6
    scalargvm table --type D --ranks 3:6 --classes 0,1/2 --format csv

Output is compact JSON unless ``--format csv`` is requested for tabular
results. Exit codes: 0 success, 1 computation-domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import DomainError
from .exactnum import format_rational, parse_rational
from .gkdim import decompose, gkdim_general
from .reducibility import (
    DEFAULT_WINDOW,
    ReducibilityReport,
    ScanResult,
    TableRow,
    is_reducible,
    proposition_table,
    scan,
    table_row,
)
from .rootdata import KINDS, LieType, scalar_weight_plus_rho
from .tableau import GREENE_MAX_LENGTH, greene_shape, rs_shape

__all__ = ["CSV_COLUMNS", "UsageError", "emit", "run_command", "main"]

CSV_COLUMNS = ("type", "rank", "p", "class", "first_point", "paper_claim", "match")

# options whose value may begin with "-" (argparse would take "-1/2" for a flag)
_VALUE_OPTIONS = {"--z", "--seq", "--weight", "--class", "--classes", "--from", "--to"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed rational {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    if not text.strip():
        return []
    return [_rational(tok) for tok in text.split(",")]


def _rank_range(text: str) -> range:
    try:
        if ":" in text:
            a, b = text.split(":")
            return range(int(a), int(b) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed rank range {text!r}") from None


def _build_parser() -> _Parser:
    parser = _Parser(prog="scalargvm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    shape = sub.add_parser("shape", help="Robinson-Schensted shape of a sequence")
    shape.add_argument("--seq", type=_rational_list, required=True)
    shape.add_argument("--oracle", action="store_true", help="cross-check with Greene invariants")

    def lie_args(p, with_p=True):
        p.add_argument("--type", choices=KINDS, required=True, dest="kind")
        p.add_argument("--rank", type=int, required=True)
        if with_p:
            p.add_argument("--p", type=int, required=True)

    gk = sub.add_parser("gkdim", help="GK dimension of L(lambda)")
    lie_args(gk, with_p=False)
    gk.add_argument("--p", type=int)
    gk.add_argument("--z", type=_rational)
    gk.add_argument("--weight", type=_rational_list, help="lambda+rho coordinates")

    red = sub.add_parser("reduce", help="reducibility of M_I(z*eta_p)")
    lie_args(red)
    red.add_argument("--z", type=_rational, required=True)

    sc = sub.add_parser("scan", help="first reducible point in a congruence class")
    lie_args(sc)
    sc.add_argument("--class", type=_rational, default=Fraction(0), dest="cls")
    sc.add_argument("--from", type=_rational, default=DEFAULT_WINDOW[0], dest="lo")
    sc.add_argument("--to", type=_rational, default=DEFAULT_WINDOW[1], dest="hi")
    sc.add_argument("--format", choices=("json", "csv"), default="json")

    tb = sub.add_parser("table", help="first reducible points against the published ones")
    tb.add_argument("--type", choices=KINDS, required=True, dest="kind")
    tb.add_argument("--ranks", type=_rank_range, required=True)
    tb.add_argument("--classes", type=_rational_list, default=[Fraction(0), Fraction(1, 2)])
    tb.add_argument("--from", type=_rational, default=DEFAULT_WINDOW[0], dest="lo")
    tb.add_argument("--to", type=_rational, default=DEFAULT_WINDOW[1], dest="hi")
    tb.add_argument("--format", choices=("json", "csv"), default="json")
    tb.add_argument("--jobs", type=int, default=1)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _lie_type(kind: str, rank: int) -> LieType:
    try:
        return LieType(kind, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_p(t: LieType, p: int) -> None:
    try:
        t.check_index(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _claim_text(claim) -> str | None:
    if claim is None or isinstance(claim, str):
        return claim
    return format_rational(claim)


def _opt(value: Fraction | None) -> str | None:
    return None if value is None else format_rational(value)


def _report_dict(r: ReducibilityReport) -> dict:
    return {
        "type": r.type.kind,
        "rank": r.type.rank,
        "p": r.p,
        "z": format_rational(r.z),
        "gkdim": r.gkdim,
        "dim_u": r.dim_u,
        "reducible": r.reducible,
    }


def _row_dict(row: TableRow) -> dict:
    return {
        "type": row.type.kind,
        "rank": row.type.rank,
        "p": row.p,
        "class": format_rational(row.congruence_class),
        "first_point": _opt(row.first_point),
        "paper_claim": _claim_text(row.paper_claim),
        "match": row.match,
    }


def _scan_dict(s: ScanResult) -> dict:
    return {
        "type": s.type.kind,
        "rank": s.type.rank,
        "p": s.p,
        "class": format_rational(s.congruence_class),
        "window": [format_rational(s.window[0]), format_rational(s.window[1])],
        "first_point": _opt(s.first_point),
        "monotone": s.monotone,
        "points": [
            {"z": format_rational(r.z), "gkdim": r.gkdim, "reducible": r.reducible}
            for r in s.points
        ],
    }


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit(result, fmt: str = "json") -> str:
    """Serialize a report, scan, table (list of rows) or plain dict.

    CSV is only defined for tabular results: a table, or a single scan
    rendered as one table row.
    """
    if fmt == "csv":
        if isinstance(result, ScanResult):
            rows = [_row_dict(table_row(result))]
        elif isinstance(result, list) and all(isinstance(r, TableRow) for r in result):
            rows = [_row_dict(r) for r in result]
        else:
            raise UsageError("csv output is only available for tables and scans")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(_csv_cell(row[c]) for c in CSV_COLUMNS)
        return buf.getvalue()
    if fmt != "json":
        raise UsageError(f"unknown format {fmt!r}")
    if isinstance(result, ReducibilityReport):
        payload = _report_dict(result)
    elif isinstance(result, ScanResult):
        payload = _scan_dict(result)
        row = table_row(result)
        payload["paper_claim"] = _claim_text(row.paper_claim)
        payload["match"] = row.match
    elif isinstance(result, list) and all(isinstance(r, TableRow) for r in result):
        payload = [_row_dict(r) for r in result]
    else:
        payload = result
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _dispatch(args) -> str:
    if args.verb == "shape":
        shape = rs_shape(args.seq)
        out = {"shape": list(shape)}
        if args.oracle:
            if len(args.seq) > GREENE_MAX_LENGTH:
                raise DomainError(
                    f"oracle supports sequences up to length {GREENE_MAX_LENGTH}"
                )
            agrees = tuple(greene_shape(args.seq)) == tuple(shape)
            if not agrees:
                raise DomainError(f"Greene oracle disagrees with insertion shape {list(shape)}")
            out["oracle"] = agrees
        return emit(out)

    if args.verb == "gkdim":
        t = _lie_type(args.kind, args.rank)
        if args.weight is not None:
            if args.p is not None or args.z is not None:
                raise UsageError("give either --weight or --p/--z, not both")
            if len(args.weight) != t.rank:
                raise UsageError(f"--weight needs {t.rank} coordinates, got {len(args.weight)}")
            weight = tuple(args.weight)
        else:
            if args.p is None or args.z is None:
                raise UsageError("gkdim needs --weight or both --p and --z")
            _check_p(t, args.p)
            weight = scalar_weight_plus_rho(t, args.p, args.z)
        dec = decompose(t, weight)

        def seq(xs):
            return None if xs is None else [format_rational(v) for v in xs]

        return emit(
            {
                "type": t.kind,
                "rank": t.rank,
                "weight": seq(weight),
                "gkdim": gkdim_general(t, weight),
                "classes": {
                    "integral": seq(dec.integral_class),
                    "half": seq(dec.half_class),
                    "other": [seq(x) for x in dec.other_classes],
                },
            }
        )

    if args.verb == "reduce":
        t = _lie_type(args.kind, args.rank)
        _check_p(t, args.p)
        return emit(is_reducible(t, args.p, args.z))

    if args.verb == "scan":
        t = _lie_type(args.kind, args.rank)
        _check_p(t, args.p)
        if not args.lo < args.hi:
            raise UsageError("--from must be smaller than --to")
        return emit(scan(t, args.p, args.cls, (args.lo, args.hi)), args.format)

    if args.verb == "table":
        if not args.ranks:
            raise UsageError("empty rank range")
        for n in (args.ranks[0], args.ranks[-1]):
            _lie_type(args.kind, n)
        if not args.lo < args.hi:
            raise UsageError("--from must be smaller than --to")
        rows = proposition_table(
            args.kind, args.ranks, args.classes, (args.lo, args.hi), max_workers=args.jobs
        )
        return emit(rows, args.format)

    raise UsageError(f"unknown verb {args.verb!r}")


def run_command(argv: list[str]) -> tuple[int, str]:
    """Run one CLI invocation and return ``(exit_code, output_text)``."""
    parser = _build_parser()
    try:
        args = parser.parse_args(_join_negative_values(list(argv)))
        return 0, _dispatch(args)
    except UsageError as exc:
        return 2, str(exc).rstrip("\n") + "\n"
    except DomainError as exc:
        return 1, f"error: {exc}\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), ""


def main(argv: list[str] | None = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code == 0 else sys.stderr
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

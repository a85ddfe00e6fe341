"""Command-line front end.

Subcommands:

  compute    index report for one family or one edge-list graph
  table      CSV parameter sweep with reference-value comparison
  grid       CSV lattice evaluation of a family's counting polynomial
  families   list the supported families

Exit codes: 0 success, 2 route disagreement, 3 domain error, 64 usage
error, 66 unreadable or malformed input file.  The default output format
comes from MPOLY_TOPO_FORMAT when set.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional, Sequence

from .errors import DomainError, EdgeListError, MPolyTopoError
from .families import ALL_FAMILIES, Family, FamilySpec, catalog_mpoly, get_info, make_spec
from .graphs import read_edge_list
from .indices import HsoReport, compute_report, format_fixed
from .polyring import eval_grid

EXIT_OK = 0
EXIT_DISAGREEMENT = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 64
EXIT_FILE = 66

FORMATS = ("text", "json", "csv")
FORMAT_ENV_VAR = "MPOLY_TOPO_FORMAT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); we want 64
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="mpoly-topo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="index report for a family or a graph")
    p_compute.add_argument("--family", help="family token, e.g. vphy")
    p_compute.add_argument("--params", default="", help="comma-separated name=value list, e.g. m=2,n=2")
    p_compute.add_argument("--graph", help="path to an edge-list file")
    p_compute.add_argument("--format", choices=FORMATS, help="output format (default: $MPOLY_TOPO_FORMAT or text)")
    p_compute.set_defaults(func=_cmd_compute)

    p_table = sub.add_parser("table", help="CSV sweep over family parameters")
    p_table.add_argument("--family", required=True)
    p_table.add_argument("--range", dest="range_spec", help="A..B; diagonal [k,k] for two-parameter families")
    p_table.add_argument("--pairs", help="explicit tuples for two-parameter families, e.g. 1,2;3,4")
    p_table.set_defaults(func=_cmd_table)

    p_grid = sub.add_parser("grid", help="evaluate the counting polynomial on a lattice")
    p_grid.add_argument("--family", required=True)
    p_grid.add_argument("--params", default="", help="comma-separated name=value list")
    p_grid.add_argument("--xrange", default="0:1", help="LO:HI for x (default 0:1)")
    p_grid.add_argument("--yrange", default="0:1", help="LO:HI for y (default 0:1)")
    p_grid.add_argument("--steps", type=int, default=25, help="lattice points per axis (default 25)")
    p_grid.set_defaults(func=_cmd_grid)

    p_fam = sub.add_parser("families", help="list supported families")
    p_fam.add_argument("--format", choices=("text", "json"), default="text")
    p_fam.set_defaults(func=_cmd_families)

    return parser


# -- argument helpers -----------------------------------------------------------


def _resolve_family(token: str) -> Family:
    try:
        return Family.from_token(token)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _parse_params(text: str) -> dict[str, int]:
    params: dict[str, int] = {}
    if not text.strip():
        return params
    for chunk in text.split(","):
        name, sep, value = chunk.partition("=")
        name = name.strip()
        if not sep or not name:
            raise UsageError(f"bad parameter assignment {chunk!r} (expected name=value)")
        try:
            params[name] = int(value)
        except ValueError:
            raise UsageError(f"parameter {name!r} needs an integer value, got {value!r}") from None
    return params


def _parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise UsageError(f"bad range {text!r} (expected A..B)") from None
    if hi_i < lo_i:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo_i, hi_i + 1))


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise UsageError(f"bad pair {chunk!r} (expected m,n)")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise UsageError(f"bad pair {chunk!r} (expected integers)") from None
    if not pairs:
        raise UsageError("empty pair list")
    return pairs


def _parse_float_range(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"bad range {text!r} (expected LO:HI)")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"bad range {text!r} (expected numbers)") from None


def _output_format(args) -> str:
    if getattr(args, "format", None):
        return args.format
    env = os.environ.get(FORMAT_ENV_VAR, "").strip().lower()
    if env:
        if env not in FORMATS:
            raise UsageError(f"{FORMAT_ENV_VAR}={env!r} is not one of {FORMATS}")
        return env
    return "text"


def _csv_writer(stream):
    return csv.writer(stream, lineterminator="\n")


# -- compute ---------------------------------------------------------------------


def _report_csv_row(report: HsoReport) -> tuple[list[str], list[str]]:
    header = ["input", "hso_float", "hso_exact", "agreement", "structural", "table_expected", "table_match"]
    row = [
        report.source,
        format_fixed(report.routes["pipeline"]),
        report.exact,
        str(report.agreement).lower(),
        "" if report.structural is None else str(report.structural).lower(),
        "" if report.table_expected is None else f"{report.table_expected:.4f}",
        "" if report.table_match is None else str(report.table_match).lower(),
    ]
    return header, row


def _cmd_compute(args) -> int:
    fmt = _output_format(args)
    if (args.family is None) == (args.graph is None):
        raise UsageError("exactly one of --family or --graph is required")

    if args.family is not None:
        family = _resolve_family(args.family)
        spec = make_spec(family, _parse_params(args.params))
        report = compute_report(spec)
    else:
        try:
            with open(args.graph, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            print(f"mpoly-topo: cannot read {args.graph}: {exc}", file=sys.stderr)
            return EXIT_FILE
        report = compute_report(read_edge_list(text), label=f"graph:{args.graph}")

    if fmt == "text":
        print(format_fixed(report.routes["pipeline"]))
    elif fmt == "json":
        print(json.dumps(report.to_json_obj(), indent=2, sort_keys=True))
    else:
        writer = _csv_writer(sys.stdout)
        header, row = _report_csv_row(report)
        writer.writerow(header)
        writer.writerow(row)
    return EXIT_OK if report.agreement else EXIT_DISAGREEMENT


# -- table -----------------------------------------------------------------------


def _cmd_table(args) -> int:
    family = _resolve_family(args.family)
    info = get_info(family)

    tuples: list[tuple[int, ...]]
    if args.range_spec and args.pairs:
        raise UsageError("--range and --pairs are mutually exclusive")
    if len(info.params) == 1:
        if args.pairs:
            raise UsageError(f"{family.value} takes one parameter; use --range A..B")
        if not args.range_spec:
            raise UsageError(f"{family.value} takes one parameter; use --range A..B")
        tuples = [(k,) for k in _parse_range(args.range_spec)]
    else:
        if args.pairs:
            tuples = list(_parse_pairs(args.pairs))
        elif args.range_spec:
            tuples = [(k, k) for k in _parse_range(args.range_spec)]
        else:
            raise UsageError(f"{family.value} takes two parameters; use --range A..B (diagonal) or --pairs")

    specs: list[FamilySpec] = []
    for values in tuples:
        try:
            specs.append(make_spec(family, dict(zip(info.params, values))))
        except DomainError as exc:
            print(f"mpoly-topo: skipping {values}: {exc}", file=sys.stderr)
    if not specs:
        raise UsageError("no valid parameter tuples in the requested range")

    writer = _csv_writer(sys.stdout)
    writer.writerow(["params", "hso_float", "hso_exact", "table_expected", "match", "structural"])
    disagreement = False
    for spec in specs:
        report = compute_report(spec)
        disagreement = disagreement or not report.agreement
        writer.writerow([
            ";".join(f"{k}={v}" for k, v in spec.params.items()),
            format_fixed(report.routes["pipeline"]),
            report.exact,
            "" if report.table_expected is None else f"{report.table_expected:.4f}",
            "" if report.table_match is None else str(report.table_match).lower(),
            str(report.structural).lower(),
        ])
    return EXIT_DISAGREEMENT if disagreement else EXIT_OK


# -- grid ------------------------------------------------------------------------


def _cmd_grid(args) -> int:
    family = _resolve_family(args.family)
    spec = make_spec(family, _parse_params(args.params))
    poly = catalog_mpoly(spec)
    points = eval_grid(poly, _parse_float_range(args.xrange), _parse_float_range(args.yrange), args.steps)
    writer = _csv_writer(sys.stdout)
    writer.writerow(["x", "y", "value"])
    for x, y, value in points:
        writer.writerow([x, y, value])
    return EXIT_OK


# -- families --------------------------------------------------------------------


def _family_entries() -> list[dict]:
    entries = []
    for family in ALL_FAMILIES:
        info = get_info(family)
        routes = (["construct"] if info.builder else []) + ["catalog", "closed"]
        entries.append({
            "family": family.value,
            "params": list(info.params),
            "domain": info.domain,
            "routes": routes,
            "note": info.note,
        })
    return entries


def _cmd_families(args) -> int:
    entries = _family_entries()
    if args.format == "json":
        print(json.dumps(entries, indent=2))
        return EXIT_OK
    width = max(len(e["family"]) for e in entries)
    pwidth = max(len(",".join(e["params"])) for e in entries)
    for e in entries:
        line = (
            f"{e['family']:<{width}}  {','.join(e['params']):<{pwidth}}  "
            f"[{','.join(e['routes'])}]  {e['domain']}"
        )
        if e["note"]:
            line += f"  ({e['note']})"
        print(line)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"mpoly-topo: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EdgeListError as exc:
        print(f"mpoly-topo: bad edge list: {exc}", file=sys.stderr)
        return EXIT_FILE
    except MPolyTopoError as exc:
        print(f"mpoly-topo: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())

"""Command line: exact tables, asymptotic constants and the brute-force census.

Exit codes: 0 success, 2 usage error, 3 solver or consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .asymptotics import DEFAULT_DIGITS, DEFAULT_M, SCHEMA_VERSION, constants_report
from .composition import DEFAULT_ORDER, build_tables, counts, edge_counts
from .dissections import Faces
from .errors import ConsistencyError, SolverError, UsageError
from .oracle import census, census_csv_rows

MAX_N = 120
MIN_DIGITS = 30

# family -> (table field, first n, faces)
FAMILIES = {
    "dissections": ("d", 2, Faces.ALL),
    "connected": ("c", 1, Faces.ALL),
    "general": ("g", 0, Faces.ALL),
    "bipartite-dissections": ("d", 2, Faces.EVEN),
    "bipartite-connected": ("c", 1, Faces.EVEN),
    "bipartite-general": ("g", 0, Faces.EVEN),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="outerplanar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("count", help="exact counts up to n vertices")
    c.add_argument("--family", required=True, choices=sorted(FAMILIES))
    c.add_argument("--n", type=int, default=DEFAULT_ORDER)
    c.add_argument("--edges", action="store_true", help="refine by number of edges")
    c.add_argument("--format", choices=("csv", "json"), default="csv")

    a = sub.add_parser("asym", help="growth constants and limit laws (JSON)")
    a.add_argument("--m", type=int, default=DEFAULT_M)
    a.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    a.add_argument("--h", default="1e-6", help="finite-difference step for edge laws")
    a.add_argument("--no-edge-law", action="store_true", help="skip the edge-law solves")
    a.add_argument("--format", choices=("csv", "json"), default="json")

    o = sub.add_parser("oracle", help="brute-force census of n-vertex outerplanar graphs")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--allow-slow", action="store_true", help="permit n = 8")
    o.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


def _csv(rows):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(command, payload):
    return json.dumps({"schema_version": SCHEMA_VERSION, "command": command,
                       "payload": payload}, indent=2) + "\n"


def count_rows(family, n_max, edges=False):
    """Header plus rows ``(n, count)`` or ``(n, m, count)``, counts as decimal strings."""
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    if not 0 <= n_max <= MAX_N:
        raise UsageError(f"--n must lie in 0..{MAX_N}")
    field, start, faces = FAMILIES[family]
    if edges and faces is not Faces.ALL:
        raise UsageError("--edges is available for the general families only")
    if faces is Faces.EVEN:
        tables = build_tables(max(n_max, 2), faces=faces)
    else:
        tables = build_tables(max(n_max, 2), edge_marked=edges)
    if edges:
        grid = edge_counts(getattr(tables, field + "_xy"))
        rows = [("n", "m", "count")]
        for n in range(start, n_max + 1):
            rows += [(str(n), str(m), str(v)) for m, v in enumerate(grid[n]) if v]
        return rows
    values = counts(getattr(tables, field))
    return [("n", "count")] + [(str(n), str(values[n])) for n in range(start, n_max + 1)]


def _rows_to_json(rows):
    head = rows[0]
    return [dict(zip(head, r)) for r in rows[1:]]


def run(argv):
    args = build_parser().parse_args(argv)
    echo = {k: v for k, v in vars(args).items()}
    if args.command == "count":
        rows = count_rows(args.family, args.n, args.edges)
        if args.format == "csv":
            return _csv(rows)
        return _json(echo, {"family": args.family, "rows": _rows_to_json(rows)})
    if args.command == "asym":
        if args.digits < MIN_DIGITS:
            raise UsageError(f"--digits must be at least {MIN_DIGITS}")
        if args.m < 1:
            raise UsageError("--m must be at least 1")
        report = constants_report(args.m, args.digits, args.h, edge_law=not args.no_edge_law)
        if args.format == "csv":
            return _csv([("name", "value", "claimed_digits")]
                        + [(k, v["value"], str(v["claimed_digits"])) for k, v in report.items()])
        return _json(echo, report)
    rows = census_csv_rows(census(args.n, allow_slow=args.allow_slow))
    if args.format == "csv":
        return _csv(rows)
    return _json(echo, {"n": args.n, "rows": _rows_to_json(rows)})


def main(argv=None):
    try:
        out = run(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (SolverError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        for entry in getattr(exc, "trace", None) or []:
            print(f"  {entry}", file=sys.stderr)
        return 3
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

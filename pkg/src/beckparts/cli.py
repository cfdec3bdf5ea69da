"""Command-line surface: counting tables, enumeration, map application, verification.

Exit codes: 0 success (and all checks passing, for ``verify``), 1 a
verification check failed, 2 usage error (bad flags, malformed partition
text, input outside a map's domain).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijections import (
    glaisher_to_distinct,
    glaisher_to_odd,
    theta1,
    theta1_even,
    theta1_even_inv,
    theta1_inv,
    theta2,
    theta2_inv,
)
from .counting import CSV_HEADER, build_table, formula_row
from .enumeration import EnumerationQuery, enumerate_distinct, enumerate_partitions
from .partitions import (
    Partition,
    PartitionClass,
    WitnessPair,
    parse_partition,
    parse_witness,
)
from .verification import run_all

MAP_FUNCTIONS = {
    "glaisher-to-odd": glaisher_to_odd,
    "glaisher-to-distinct": glaisher_to_distinct,
    "theta1": theta1,
    "theta1-inv": theta1_inv,
    "theta2": theta2,
    "theta2-inv": theta2_inv,
    "theta1-even": theta1_even,
    "theta1-even-inv": theta1_even_inv,
}

_CLASS_CHOICES = [cls.value for cls in PartitionClass]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beckparts",
        description="Exact counting, enumeration and verification of "
        "Beck-type partition identities.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    count = sub.add_parser("count", help="emit the counter row for one n (CSV)")
    count.add_argument("--n", type=int, required=True)
    count.add_argument("--format", choices=["text", "json", "csv"], default="text")
    count.set_defaults(handler=_cmd_count)

    table = sub.add_parser("table", help="emit counter rows for n = 0..n_max (CSV)")
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--format", choices=["text", "json", "csv"], default="text")
    table.set_defaults(handler=_cmd_table)

    enum = sub.add_parser("enumerate", help="list partitions of n, one per line")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--class", dest="cls", choices=_CLASS_CHOICES, default=None)
    enum.add_argument(
        "--avoid",
        type=int,
        default=None,
        metavar="M",
        help="exclude part M (distinct partitions only)",
    )
    enum.add_argument("--format", choices=["text", "json"], default="text")
    enum.set_defaults(handler=_cmd_enumerate)

    map_cmd = sub.add_parser("map", help="apply a bijection to one partition")
    map_cmd.add_argument("--fn", choices=sorted(MAP_FUNCTIONS), required=True)
    map_cmd.add_argument(
        "input",
        help="partition text such as 3+2^3+1^2, or (6+5+2, 2) for theta2-inv",
    )
    map_cmd.add_argument("--format", choices=["text", "json"], default="text")
    map_cmd.set_defaults(handler=_cmd_map)

    verify = sub.add_parser("verify", help="run the full check battery")
    verify.add_argument(
        "--n-max",
        type=int,
        default=None,
        help="cap both budgets at this n",
    )
    verify.add_argument("--budget-enum", type=int, default=40)
    verify.add_argument("--budget-formula", type=int, default=200)
    verify.add_argument("--format", choices=["text", "json"], default="json")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def _cmd_count(args: argparse.Namespace) -> int:
    row = formula_row(args.n)
    if args.format == "json":
        print(json.dumps(row.to_json_obj()))
    else:
        print(CSV_HEADER)
        print(row.to_csv())
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    table = build_table(args.n_max, pipeline="formula")
    if args.format == "json":
        print(json.dumps([row.to_json_obj() for row in table.rows]))
    else:
        sys.stdout.write(table.to_csv())
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    if args.avoid is not None and args.cls != "distinct":
        raise ValueError("--avoid requires --class distinct")
    if args.cls == "distinct":
        stream = enumerate_distinct(args.n, args.avoid)
    else:
        cls = None if args.cls is None else PartitionClass(args.cls)
        stream = enumerate_partitions(EnumerationQuery(args.n, cls))
    if args.format == "json":
        print(json.dumps([p.to_json_obj() for p in stream]))
    else:
        for p in stream:
            print(p.to_text())
    return 0


def _map_result_json(result: Partition | WitnessPair) -> dict:
    if isinstance(result, WitnessPair):
        return {"kind": "witness", **result.to_json_obj()}
    return {"kind": "partition", **result.to_json_obj()}


def _cmd_map(args: argparse.Namespace) -> int:
    raw = args.input
    if args.fn == "theta2-inv" and raw.lstrip().startswith("("):
        value: Partition | WitnessPair = parse_witness(raw)
    else:
        value = parse_partition(raw)
    result = MAP_FUNCTIONS[args.fn](value)
    if args.format == "json":
        print(json.dumps(_map_result_json(result)))
    else:
        print(result.to_text())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    enum_budget = args.budget_enum
    formula_budget = args.budget_formula
    if args.n_max is not None:
        enum_budget = min(enum_budget, args.n_max)
        formula_budget = min(formula_budget, args.n_max)
    reports = run_all(enum_budget, formula_budget)
    if args.format == "text":
        for report in reports:
            lo, hi = report.n_range
            line = f"{report.status.upper():4} {report.check_name} [n={lo}..{hi}] ({report.elapsed:.2f}s)"
            print(line)
            if report.counterexample:
                print(f"     counterexample: {json.dumps(report.counterexample)}")
    else:
        print(json.dumps([report.to_json_obj() for report in reports], indent=2))
    return 0 if all(report.passed for report in reports) else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run_main() -> None:
    sys.exit(main())

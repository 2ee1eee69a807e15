"""Command-line interface.

Subcommands: dims, chartable, decompose, specht, verify, bench.
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .characters import character_table, dimension
from .combinatorics import standard_tableaux
from .errors import DomainError, ParseError, ResourceLimitError
from .fileformats import load_module_vector, save_decomposition, save_module_vector
from .hoeffding import DEFAULT_ORACLE_CEILING, decompose
from .specht import polytabloid
from .verify import RunConfig, bench, run_suites


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--ceiling",
        type=int,
        default=DEFAULT_ORACLE_CEILING,
        help=f"brute-force bound for n!-cost routes (default {DEFAULT_ORACLE_CEILING})",
    )

    parser = argparse.ArgumentParser(
        prog="spechtstat",
        description=(
            "Exact Hoeffding decompositions of symmetric statistics of sampling "
            "without replacement, and their two-row Specht module structure."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="print the dimension table for degree n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("chartable", parents=[common], help="export a two-row character table as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-l", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("decompose", parents=[common], help="decompose a vector file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--input", type=Path, required=True)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("specht", parents=[common], help="write standard polytabloid basis vectors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--out", type=Path, required=True, help="output directory")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument(
        "--suite",
        choices=["all", "decomp", "equiv", "shift", "specht"],
        default="all",
    )
    p.add_argument("--report", type=Path, default=None, help="write a JSON report here")

    p = sub.add_parser("bench", parents=[common], help="time the kernel route vs the n! oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_dims(args) -> int:
    print(f" l  dimension   (n={args.n})")
    for l in range(args.n // 2 + 1):
        print(f" {l}  {dimension(args.n, l)}")
    return 0


def _cmd_chartable(args) -> int:
    table = character_table(args.n, args.max_l)
    args.out.write_text(table.csv_text())
    print(f"wrote {len(table.rows)} classes x {args.max_l + 1} characters to {args.out}")
    return 0


def _cmd_decompose(args) -> int:
    h = load_module_vector(args.input)
    if h.n != args.n or h.l != args.m:
        raise DomainError(
            f"input file has shape (n={h.n}, l={h.l}), flags say (n={args.n}, m={args.m})"
        )
    dec = decompose(h)
    save_decomposition(dec, args.out)
    nonzero = sum(1 for l in range(1, dec.m + 1) if not dec.kernels[l].is_zero())
    print(f"wrote decomposition to {args.out}: mean={dec.mean}, {nonzero} nonzero kernels")
    return 0


def _cmd_specht(args) -> int:
    args.out.mkdir(parents=True, exist_ok=True)
    count = 0
    for t in standard_tableaux(args.n, args.l):
        name = "-".join(str(a) for a in t.bottom_row) + ".mv"
        save_module_vector(polytabloid(t), args.out / name)
        count += 1
    print(f"wrote {count} polytabloid basis vectors to {args.out}/")
    return 0


def _cmd_verify(args) -> int:
    config = RunConfig(
        n=args.n,
        m=args.m,
        seed=args.seed,
        trials=args.trials,
        brute_force_ceiling=args.ceiling,
        report_path=str(args.report) if args.report else None,
    )
    reports = run_suites(config, args.suite)
    for report in reports:
        print(report.render(), end="")
    if args.report is not None:
        payload = {"reports": [r.to_json_dict() for r in reports]}
        args.report.write_text(json.dumps(payload, indent=2) + "\n")
    return 0 if all(r.ok for r in reports) else 1


def _cmd_bench(args) -> int:
    result = bench(args.n, args.m, seed=args.seed, ceiling=args.ceiling)
    print(result.render(), end="")
    if args.n >= 7 and args.m >= 2 and result.oracle_seconds is not None:
        if result.kernel_seconds < result.oracle_seconds:
            print("kernel route is faster, as required for n >= 7")
        else:
            print("FAIL: kernel route not faster than the oracle route")
            return 1
    return 0


_COMMANDS = {
    "dims": _cmd_dims,
    "chartable": _cmd_chartable,
    "decompose": _cmd_decompose,
    "specht": _cmd_specht,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, ParseError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success (including "no 3TDS exists"), 1 domain failure
(matrix fails the kappa-bound, solver aborted, check property failed),
2 usage, I/O or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .check import build_table, render_table, run_consistency_check
from .construct import construct_min_3tds
from .formats import FORMATS, MatrixParseError, parse_matrix_text, render_matrix
from .gamma import gamma_3t
from .matrix import components, is_ktds, ones_count
from .solver import SolverConfig, Status, solve_min_ktds

NO_3TDS = "no 3TDS exists"


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_gamma(args) -> int:
    g = gamma_3t(args.n, args.m)
    if g.value is None:
        print(f"{NO_3TDS} (regime {g.regime.value})")
    else:
        print(f"gamma = {g.value} (regime {g.regime.value})")
    return 0


def cmd_construct(args) -> int:
    M = construct_min_3tds(args.n, args.m)
    if M is None:
        print(NO_3TDS)
        return 0
    _emit(render_matrix(M, args.format), args.output)
    return 0


def cmd_verify(args) -> int:
    M = parse_matrix_text(Path(args.file).read_bytes())
    ok = is_ktds(M, args.k)
    print(f"size: {M.n_rows}x{M.n_cols}")
    print(f"{args.k}TDS: {'yes' if ok else 'no'}")
    print(f"ones: {ones_count(M)}")
    comps = components(M)
    print(f"components: {len(comps)}")
    for c in comps:
        rows = ",".join(map(str, sorted(c.row_indices)))
        cols = ",".join(map(str, sorted(c.col_indices)))
        print(f"  {c.shape[0]}x{c.shape[1]} ones={c.ones} rows={rows} cols={cols}")
    return 0 if ok else 1


def cmd_solve(args) -> int:
    seed = None
    if args.seed_upper_bound and args.k == 3:
        seed = gamma_3t(args.n, args.m).value
    cfg = SolverConfig(
        node_budget=args.node_budget,
        time_budget=args.time_budget,
        initial_upper_bound=seed,
        use_naive_enumeration=args.naive,
    )
    rep = solve_min_ktds(args.n, args.m, args.k, cfg)
    print(f"status: {rep.status.value}")
    if rep.status is Status.NO_SOLUTION:
        print(f"no {args.k}TDS exists")
    if rep.value is not None:
        print(f"value: {rep.value}")
    print(f"nodes: {rep.nodes_explored}")
    if rep.witness is not None:
        sys.stdout.write(render_matrix(rep.witness, "grid"))
    print(f"elapsed: {rep.elapsed:.3f}s", file=sys.stderr)
    return 1 if rep.status is Status.ABORTED else 0


def cmd_table(args) -> int:
    rows = build_table(args.max_n, args.max_m, args.oracle_limit)
    sys.stdout.write(render_table(rows, args.format))
    return 0


def cmd_check(args) -> int:
    if args.max_n > args.max_m:
        print("--max-n must not exceed --max-m", file=sys.stderr)
        return 2
    report = run_consistency_check(args.max_n, args.max_m, args.oracle_limit)
    sys.stdout.write(report.summary())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="rooktds",
        description="3-tuple total domination of rook's graphs Kn x Km.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gamma", help="closed-form value and the regime that produced it")
    s.add_argument("n", type=_positive_int)
    s.add_argument("m", type=_positive_int)
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("construct", help="print a minimum 3TDS matrix")
    s.add_argument("n", type=_positive_int)
    s.add_argument("m", type=_positive_int)
    s.add_argument("--format", choices=FORMATS, default="grid")
    s.add_argument("-o", "--output", metavar="FILE")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", help="check a grid-format matrix against the kappa-bound")
    s.add_argument("file")
    s.add_argument("--k", type=_positive_int, default=3)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("solve", help="exact branch-and-bound minimum")
    s.add_argument("n", type=_positive_int)
    s.add_argument("m", type=_positive_int)
    s.add_argument("--k", type=_positive_int, default=3)
    s.add_argument("--time-budget", type=_positive_float, metavar="SECS")
    s.add_argument("--node-budget", type=_positive_int, metavar="N")
    s.add_argument("--seed-upper-bound", action="store_true",
                   help="start from the closed-form value (k=3 only)")
    s.add_argument("--naive", action="store_true", help="enumerate all 2^(n*m) matrices instead")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("table", help="table of values for 1 <= n <= max-n, n <= m <= max-m")
    s.add_argument("--max-n", type=_positive_int, required=True)
    s.add_argument("--max-m", type=_positive_int, required=True)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--oracle-limit", type=int, default=0, metavar="CELLS",
                   help="also run the exact solver when n*m <= CELLS")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("check", help="consistency harness; nonzero exit on any failure")
    s.add_argument("--max-n", type=_positive_int, required=True)
    s.add_argument("--max-m", type=_positive_int, required=True)
    s.add_argument("--oracle-limit", type=int, default=30, metavar="CELLS")
    s.set_defaults(func=cmd_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

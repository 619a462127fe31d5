"""Command-line front end: solve, validate, oracle, generate, bench.

Exit codes: 0 success, 1 parse/validation error, 2 infeasible instance.
Diagnostics go to stderr; documents and CSV go to stdout or --out.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from . import io_formats as iof
from .errors import (
    AssumptionUnsatisfiable,
    IllegalMoveInPlan,
    InfeasibleAssumption,
    InstanceParseError,
    PebbleRestsOnTransShipment,
)
from .generate import KINDS, generate_random_instance
from .instance import goal_reached
from .oracle import OracleOutcome, bfs_solve
from .plans import Variant, apply_plan
from .pmt import solve

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INFEASIBLE = 2


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_solve(args):
    try:
        instance = iof.parse_instance(_read(args.instance))
    except InstanceParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        plan = solve(instance)
    except InfeasibleAssumption as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(iof.serialize_plan(plan), args.out)
    return EXIT_OK


def _cmd_validate(args):
    try:
        instance = iof.parse_instance(_read(args.instance))
        plan = iof.parse_plan(_read(args.plan))
    except InstanceParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        final = apply_plan(instance.tree, instance.start, plan, instance.variant)
    except IllegalMoveInPlan as exc:
        print(f"illegal move at index {exc.index}: {exc.cause}", file=sys.stderr)
        return EXIT_PARSE
    except PebbleRestsOnTransShipment as exc:
        print(
            f"pebble rests on a trans-shipment vertex after move {exc.index}",
            file=sys.stderr,
        )
        return EXIT_PARSE
    if not goal_reached(instance, final):
        print("plan replays legally but does not reach the goal", file=sys.stderr)
        return EXIT_PARSE
    print(f"OK: {len(plan)} moves reach the {instance.kind} goal", file=sys.stderr)
    return EXIT_OK


def _cmd_oracle(args):
    try:
        instance = iof.parse_instance(_read(args.instance))
    except InstanceParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    limits = {"max_states": args.max_states, "max_depth": args.max_depth}
    result = bfs_solve(instance, limits)
    if result.outcome is OracleOutcome.OPTIMAL:
        print(result.optimal_length)
    elif result.outcome is OracleOutcome.INFEASIBLE:
        print("INFEASIBLE")
    else:
        print("LIMIT")
    return EXIT_OK


def _cmd_generate(args):
    try:
        instance = generate_random_instance(
            args.seed, args.n, args.pebbles, Variant(args.variant), args.kind
        )
    except AssumptionUnsatisfiable as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(iof.serialize_instance(instance), args.out)
    return EXIT_OK


def _parse_grid(spec):
    if ":" in spec:
        lo, hi, step = (int(x) for x in spec.split(":"))
        return tuple(range(lo, hi + 1, step))
    return tuple(int(x) for x in spec.split(","))


def _cmd_bench(args):
    n_values = _parse_grid(args.n_grid) if args.n_grid else None
    p_grid = _parse_grid(args.p_grid) if args.p_grid else None
    rows = bench_mod.run_grid(
        kind=args.kind,
        n_values=n_values,
        p_grid=p_grid,
        seeds_per_cell=args.seeds,
        seed_base=args.seed_base,
        variant=Variant(args.variant),
        jobs=args.jobs,
    )
    _emit(bench_mod.rows_to_csv(rows), args.out)
    ratio = bench_mod.max_bound_ratio(rows) if rows else float("nan")
    print(f"{len(rows)} cells, max mean_moves/bound = {ratio:.4f}", file=sys.stderr)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pebbletree",
        description="Pebble motion on trees: solvers, validation, benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file, emit a plan file")
    p.add_argument("instance")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("validate", help="replay a plan against an instance")
    p.add_argument("instance")
    p.add_argument("plan")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("oracle", help="exhaustive-search optimum for small instances")
    p.add_argument("instance")
    p.add_argument("--max-states", type=int, default=2_000_000)
    p.add_argument("--max-depth", type=int, default=None)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("generate", help="emit a random solvable instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pebbles", type=int, required=True)
    p.add_argument("--variant", choices=[v.value for v in Variant], default="plain")
    p.add_argument("--kind", choices=KINDS, default="pmt")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="sweep an (n, p) grid and emit CSV")
    p.add_argument("--kind", choices=KINDS, default="motion")
    p.add_argument("--n-grid", help="lo:hi:step or comma list (default 20:200:20)")
    p.add_argument("--p-grid", help="lo:hi:step or comma list (default 5..3n/4 by 5)")
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--seed-base", type=int, default=0)
    p.add_argument("--variant", choices=[v.value for v in Variant], default="plain")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

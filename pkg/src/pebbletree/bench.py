"""Benchmark harness: sweep (n, p) grids, solve, validate, aggregate to CSV.

Every cell is deterministic given the seed base; rows are written in grid
order regardless of worker scheduling.  The ``bound`` column is the
per-kind reference quantity the mean move count is compared against:
n*c for motion planning, p*n*c + n^2 for the labeled problem, n^2 for the
unlabeled problem and n*q for hole gathering.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import AssumptionUnsatisfiable
from .generate import generate_random_instance
from .instance import GatherHolesProblem
from .plans import Variant, vertex_crossings
from .pmt import solve
from .tree import analyze

CSV_COLUMNS = (
    "n", "p", "c", "bound", "mean_moves", "max_moves", "max_crossing",
    "mean_runtime_ms",
)


@dataclass(frozen=True)
class BenchRow:
    n: int
    p: int
    c: float
    bound: float
    mean_moves: float
    max_moves: int
    max_crossing: int
    mean_runtime_ms: float


def default_n_grid():
    return tuple(range(20, 201, 20))


def default_p_grid(n):
    return tuple(range(5, 3 * n // 4 + 1, 5))


def _cell_seed(seed_base, n, p, i):
    return seed_base + 1_000_003 * n + 1_009 * p + i


def _bound(kind, n, p, c, instance):
    if kind == "motion":
        return n * c
    if kind == "pmt":
        return p * n * c + n * n
    if kind == "unlabeled":
        return n * n
    q = len(instance.problem.subtree)
    return n * q


def run_cell(kind, n, p, seeds_per_cell, seed_base, variant):
    """Aggregate one (n, p) cell; None when no seed yields a solvable instance."""
    lengths = []
    crossings = []
    runtimes = []
    c_values = []
    bounds = []
    for i in range(seeds_per_cell):
        try:
            inst = generate_random_instance(
                _cell_seed(seed_base, n, p, i), n, p, variant, kind
            )
        except AssumptionUnsatisfiable:
            continue
        t0 = time.perf_counter()
        plan = solve(inst)
        runtimes.append((time.perf_counter() - t0) * 1000.0)
        lengths.append(len(plan))
        crossings.append(max(vertex_crossings(plan).values(), default=0))
        c = analyze(inst.tree).c
        c_values.append(c)
        bounds.append(_bound(kind, n, p, c, inst))
    if not lengths:
        return None
    k = len(lengths)
    return BenchRow(
        n=n,
        p=p,
        c=sum(c_values) / k,
        bound=sum(bounds) / k,
        mean_moves=sum(lengths) / k,
        max_moves=max(lengths),
        max_crossing=max(crossings),
        mean_runtime_ms=sum(runtimes) / k,
    )


def _cell_task(args):
    return run_cell(*args)


def run_grid(kind, n_values=None, p_grid=None, seeds_per_cell=100, seed_base=0,
             variant=Variant.PLAIN, jobs=1):
    """Run every (n, p) cell of the grid; returns rows in grid order."""
    n_values = tuple(n_values) if n_values is not None else default_n_grid()
    cells = []
    for n in n_values:
        ps = default_p_grid(n) if p_grid is None else tuple(p for p in p_grid if p < n)
        cells.extend((kind, n, p, seeds_per_cell, seed_base, variant) for p in ps)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_cell_task, cells))
    else:
        results = [run_cell(*cell) for cell in cells]
    return [row for row in results if row is not None]


def rows_to_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([
            row.n, row.p, f"{row.c:.2f}", f"{row.bound:.1f}",
            f"{row.mean_moves:.2f}", row.max_moves, row.max_crossing,
            f"{row.mean_runtime_ms:.3f}",
        ])
    return buf.getvalue()


def max_bound_ratio(rows):
    """Largest mean_moves / bound over the grid; the linear-cap statistic."""
    return max(row.mean_moves / row.bound for row in rows)

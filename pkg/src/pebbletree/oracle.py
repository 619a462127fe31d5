"""Exhaustive search over the labeled configuration space of small instances.

Ground truth for the suboptimal solvers: shortest plans, feasibility
verdicts, and full reachable sets.  States are tuples of pebble positions
(holes anonymous), which shrinks the space by a |H|! factor.  In the
trans-shipment variant the atomic crossing of a trans-shipment vertex is a
single state-graph edge of move-cost two, so search is uniform-cost rather
than plain breadth-first.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass

from .instance import (
    GatherHolesProblem,
    MotionPlanningProblem,
    PMTProblem,
    UnlabeledProblem,
    assumption_holds,
)
from .plans import Move, Plan, Variant


class OracleOutcome(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    LIMIT_EXCEEDED = "limit"


@dataclass(frozen=True)
class OracleResult:
    outcome: OracleOutcome
    plan: Plan | None = None

    @property
    def optimal_length(self):
        return None if self.plan is None else len(self.plan)


DEFAULT_LIMITS = {"max_states": 2_000_000, "max_depth": None}


def _goal_predicate(problem):
    if isinstance(problem, PMTProblem):
        target = problem.target.positions
        return lambda state: state == target
    if isinstance(problem, UnlabeledProblem):
        dest = problem.destinations
        return lambda state: frozenset(state) == dest
    if isinstance(problem, MotionPlanningProblem):
        p, t = problem.pebble, problem.target
        return lambda state: state[p] == t
    if isinstance(problem, GatherHolesProblem):
        sub = problem.subtree
        return lambda state: not (sub & frozenset(state))
    raise ValueError(f"unknown problem type {type(problem).__name__}")


def _successors(tree, state, ts_mode):
    """Yield (next_state, moves) over single moves and atomic ts crossings."""
    occupied = set(state)
    for i, u in enumerate(state):
        for w in tree.neighbors(u):
            if w in occupied:
                continue
            if ts_mode and tree.is_trans_shipment(w):
                for y in tree.neighbors(w):
                    if y != u and y not in occupied:
                        nxt = state[:i] + (y,) + state[i + 1 :]
                        yield nxt, (Move(u, w), Move(w, y))
            else:
                nxt = state[:i] + (w,) + state[i + 1 :]
                yield nxt, (Move(u, w),)


def bfs_solve(instance, limits=None):
    """Shortest plan reaching the instance goal, or a feasibility verdict.

    Uniform-cost search; practical up to roughly n <= 9 with <= 4 pebbles.
    """
    lim = dict(DEFAULT_LIMITS)
    if limits:
        lim.update(limits)
    max_states = lim["max_states"]
    max_depth = lim["max_depth"]

    tree = instance.tree
    ts_mode = instance.variant is Variant.TRANS_SHIPMENT
    start = instance.start.positions
    goal = _goal_predicate(instance.problem)

    dist = {start: 0}
    parent = {start: None}
    counter = 0
    frontier = [(0, counter, start)]
    while frontier:
        d, _, state = heapq.heappop(frontier)
        if d > dist[state]:
            continue
        if goal(state):
            moves = []
            cur = state
            while parent[cur] is not None:
                prev, step = parent[cur]
                moves.extend(reversed(step))
                cur = prev
            return OracleResult(OracleOutcome.OPTIMAL, Plan(reversed(moves)))
        if max_depth is not None and d >= max_depth:
            continue
        for nxt, step in _successors(tree, state, ts_mode):
            nd = d + len(step)
            if nxt not in dist or nd < dist[nxt]:
                if len(dist) >= max_states and nxt not in dist:
                    return OracleResult(OracleOutcome.LIMIT_EXCEEDED)
                dist[nxt] = nd
                parent[nxt] = (state, step)
                counter += 1
                heapq.heappush(frontier, (nd, counter, nxt))
    if max_depth is not None:
        return OracleResult(OracleOutcome.LIMIT_EXCEEDED)
    return OracleResult(OracleOutcome.INFEASIBLE)


def reachable_configurations(tree, start, variant=Variant.PLAIN, max_states=None):
    """All pebble-position tuples reachable from ``start`` (a Configuration).

    Returns a set of position tuples; raises ``MemoryError``-style overrun
    only via ``max_states`` (None = unbounded).
    """
    ts_mode = variant is Variant.TRANS_SHIPMENT
    start_state = start.positions
    seen = {start_state}
    stack = [start_state]
    while stack:
        state = stack.pop()
        for nxt, _ in _successors(tree, state, ts_mode):
            if nxt not in seen:
                if max_states is not None and len(seen) >= max_states:
                    raise OverflowError("reachable set exceeds max_states")
                seen.add(nxt)
                stack.append(nxt)
    return seen


def check_assumption(instance):
    """True iff the variant-appropriate hole-count inequality holds."""
    return assumption_holds(
        instance.tree, instance.start.pebble_count, instance.variant
    )

"""Deterministic random instance generation.

Trees are drawn uniformly by decoding random Pruefer sequences.  Instances
that violate the variant feasibility assumption are rejected and resampled
up to a cap, so every returned instance is solvable.
"""

from __future__ import annotations

import heapq
import random

from .errors import AssumptionUnsatisfiable
from .instance import (
    GatherHolesProblem,
    Instance,
    MotionPlanningProblem,
    PMTProblem,
    UnlabeledProblem,
    assumption_holds,
)
from .plans import Configuration, Variant
from .tree import Tree

KINDS = ("pmt", "unlabeled", "motion", "gather")

TS_DENSITY = 0.12  # fraction of vertices offered trans-shipment status


def random_tree_edges(rng, n):
    """Uniform random labeled tree via Pruefer decoding."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _mark_trans_shipment(rng, n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    candidates = [v for v in range(n) if len(adj[v]) >= 2]
    rng.shuffle(candidates)
    want = max(1, int(n * TS_DENSITY))
    chosen = set()
    for v in candidates:
        if len(chosen) >= want:
            break
        if all(w not in chosen for w in adj[v]):
            chosen.add(v)
    return frozenset(chosen)


def _random_connected_subtree(rng, tree, size):
    start = rng.randrange(tree.n)
    chosen = {start}
    frontier = list(tree.neighbors(start))
    while len(chosen) < size and frontier:
        idx = rng.randrange(len(frontier))
        v = frontier.pop(idx)
        if v in chosen:
            continue
        chosen.add(v)
        frontier.extend(w for w in tree.neighbors(v) if w not in chosen)
    return frozenset(chosen)


def generate_random_instance(seed, n, p, variant=Variant.PLAIN, kind="pmt",
                             max_resamples=500):
    """One solvable random instance, fully determined by ``seed``."""
    if n < 2:
        raise ValueError("need at least two vertices")
    if not 1 <= p < n:
        raise ValueError("pebble count must be in 1..n-1")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    rng = random.Random(seed)
    ts_mode = variant is Variant.TRANS_SHIPMENT

    for _ in range(max_resamples):
        edges = random_tree_edges(rng, n)
        ts = _mark_trans_shipment(rng, n, edges) if ts_mode else frozenset()
        tree = Tree(n, edges, ts)
        resting = [v for v in range(n) if v not in ts]
        if p > len(resting):
            continue
        if not assumption_holds(tree, p, variant):
            continue
        start = Configuration(n, rng.sample(resting, p))
        if kind == "pmt":
            problem = PMTProblem(start, Configuration(n, rng.sample(resting, p)))
        elif kind == "unlabeled":
            problem = UnlabeledProblem(start, frozenset(rng.sample(resting, p)))
        elif kind == "motion":
            problem = MotionPlanningProblem(
                start, rng.randrange(p), rng.choice(resting)
            )
        else:
            free_regular = (n - p) - len(ts) if ts_mode else n - p
            if free_regular < 1:
                continue
            size = rng.randint(1, max(1, min(n // 2, free_regular)))
            sub = _random_connected_subtree(rng, tree, size)
            regular_load = sum(1 for v in sub if tree.is_regular(v))
            if ts_mode and regular_load > free_regular:
                continue
            if not ts_mode and len(sub) > n - p:
                continue
            problem = GatherHolesProblem(start, sub)
        return Instance(tree, variant, problem)
    raise AssumptionUnsatisfiable(
        f"no tree of size {n} with {p} pebbles satisfied the {variant.value} "
        f"assumption in {max_resamples} attempts"
    )

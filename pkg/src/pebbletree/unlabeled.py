"""Leaf-pruning unlabeled solver and the gather-holes routine.

Both operate on a Tree or a connected TreeView.  Because a connected view
of a tree has the same unique paths as the base tree, path construction can
use the tree directly while nearest-vertex searches stay inside the view.
"""

from __future__ import annotations

from collections import deque

from . import tree as tr
from .errors import (
    InfeasibleAssumption,
    InternalStuck,
    NotConnectedSubtree,
    NotEnoughHoles,
)
from .instance import require_assumption
from .plans import Plan, Variant, apply_plan, bring_hole, move_pebble


def _nearest(tree, active, source, accept):
    """BFS inside ``active`` from ``source``; lowest-id match at minimum distance."""
    if accept(source):
        return source
    dist = {source: 0}
    queue = deque([source])
    frontier_hits = []
    frontier_depth = None
    while queue:
        u = queue.popleft()
        du = dist[u]
        if frontier_depth is not None and du >= frontier_depth:
            break
        for w in tree.neighbors(u):
            if w in active and w not in dist:
                dist[w] = du + 1
                if accept(w):
                    frontier_hits.append(w)
                    frontier_depth = du + 1
                queue.append(w)
    return min(frontier_hits) if frontier_hits else None


def solve_unlabeled(tree, config, destinations, variant=Variant.PLAIN):
    """Plan moving the pebbles of ``config`` onto the ``destinations`` set.

    Leaf-elimination procedure: repeatedly take the lowest-id leaf of the
    shrinking tree and either prune it, pull the nearest pebble onto it, or
    push its pebble toward the nearest unoccupied vertex (a regular one in
    the ts variant).  At most n moves per leaf, hence at most n^2 overall.
    """
    active = set(tree.vertices())
    S = {v for v in config.positions if v in active}
    D = set(destinations)
    if not D <= active:
        raise InfeasibleAssumption("destinations outside the tree")
    if len(D) != len(S):
        raise InfeasibleAssumption(
            f"{len(S)} pebbles cannot fill {len(D)} destinations"
        )
    require_assumption(tree, len(S), variant)
    if variant is Variant.TRANS_SHIPMENT:
        bad = [v for v in S | D if tree.is_trans_shipment(v)]
        if bad:
            raise InfeasibleAssumption(
                f"sources/destinations on trans-shipment vertices: {bad}"
            )

    deg = {v: sum(1 for w in tree.neighbors(v) if w in active) for v in active}
    leaves = {v for v in active if deg[v] <= 1}
    ts_mode = variant is Variant.TRANS_SHIPMENT

    moves = []
    cfg = config
    while active:
        v = min(leaves)
        if (v in S) == (v in D):
            pass  # satisfied or irrelevant leaf: prune
        elif v in D:
            w = _nearest(tree, active, v, lambda x: x in S)
            if w is None:
                raise InternalStuck("no pebble available for a destination leaf")
            part = move_pebble(tree, cfg, w, v, variant)
            cfg = apply_plan(tree, cfg, part, variant)
            moves.extend(part)
            S.discard(w)
            S.add(v)
        else:
            if ts_mode:
                ok = lambda x: x not in S and tree.is_regular(x)
            else:
                ok = lambda x: x not in S
            u = _nearest(tree, active, v, ok)
            if u is None:
                raise InternalStuck("no unoccupied vertex for a source leaf")
            part = bring_hole(tree, cfg, u, v, variant)
            cfg = apply_plan(tree, cfg, part, variant)
            moves.extend(part)
            S.discard(v)
            S.add(u)
        # prune v
        active.remove(v)
        leaves.discard(v)
        S.discard(v)
        D.discard(v)
        for w in tree.neighbors(v):
            if w in active:
                deg[w] -= 1
                if deg[w] <= 1:
                    leaves.add(w)
    return Plan(moves)


def gather_holes(tree, config, subtree_vertices, variant=Variant.PLAIN):
    """Plan that leaves ``subtree_vertices`` free of pebbles.

    Reserves the holes closest to the subtree and routes them in, closest
    first, tracking each reserved hole's position through the applied
    moves.  Each round empties exactly one occupied subtree vertex, either
    by shifting the occupants of the whole escape path one step outward, or
    by first walking the pebble along the empty in-subtree prefix.  Runs in
    at most q rounds of at most n moves each.
    """
    sub = frozenset(subtree_vertices)
    if not sub:
        return Plan(())
    for v in sub:
        if not tree.has_vertex(v):
            raise ValueError(f"subtree vertex {v} not in tree")
    if not tr.is_connected_subtree(tree, sub):
        raise NotConnectedSubtree(f"{sorted(sub)} does not induce a connected subtree")

    ts_mode = variant is Variant.TRANS_SHIPMENT
    if ts_mode:
        q = sum(1 for v in sub if tree.is_regular(v))
        eligible = [
            v for v in tree.vertices() if config.is_hole(v) and tree.is_regular(v)
        ]
    else:
        q = len(sub)
        eligible = [v for v in tree.vertices() if config.is_hole(v)]
    if q > len(eligible):
        raise NotEnoughHoles(f"need {q} holes, found {len(eligible)}")

    reserved = tr.closest_subset(tree, eligible, sub, q)
    tracked = {v for v in reserved if v not in sub}
    occupied = {v for v in sub if not config.is_hole(v)}
    if len(tracked) != len(occupied):
        raise InternalStuck("reserved-hole bookkeeping out of balance")

    moves = []
    cfg = config
    while occupied:
        dist_sub = tr.distances_to_set(tree, sub)
        v = min(tracked, key=lambda x: (dist_sub[x], x))
        dist_v = tr.distances_from(tree, v)
        u = min(occupied, key=lambda x: (dist_v[x], x))
        path = tr.path_between(tree, u, v)
        inside = 0
        while inside + 1 < len(path) and path[inside + 1] in sub:
            inside += 1
        w = path[inside]
        parts = []

        def run(part):
            nonlocal cfg
            cfg = apply_plan(tree, cfg, part, variant)
            parts.append(part)

        if w == u:
            run(bring_hole(tree, cfg, v, u, variant))
        elif ts_mode and tree.is_trans_shipment(w):
            # the pebble may not pause on the exit vertex: free the first
            # vertex beyond it, then walk the pebble through in one go
            beyond = path[inside + 1]
            if beyond != v:
                run(bring_hole(tree, cfg, v, beyond, variant))
            run(move_pebble(tree, cfg, u, beyond, variant))
        else:
            run(move_pebble(tree, cfg, u, w, variant))
            run(bring_hole(tree, cfg, v, w, variant))
        chosen = v
        for part in parts:
            moves.extend(part)
            for a, b in part:
                if b in tracked:
                    tracked.discard(b)
                    tracked.add(a)
                if b == chosen:
                    chosen = a
        tracked.discard(chosen)
        if any(x in sub for x in tracked):
            raise InternalStuck("a reserved hole drifted into the subtree early")
        occupied.discard(u)
        if any(not cfg.is_hole(x) for x in sub if x not in occupied):
            raise InternalStuck("gather re-occupied an emptied subtree vertex")
    return Plan(moves)

"""The full labeled solver: leaf intermediate targets, then per-pebble routing.

Pipeline: pick |P| leaves whose one-by-one removal never increases the
feasibility constant; compute an unlabeled plan g that would move the
pebbles of the *final* configuration onto those leaves (g itself is never
executed forward); route each pebble to its leaf with the caterpillar
solver on a shrinking tree view; finish by executing g reversed.
"""

from __future__ import annotations

from . import tree as tr
from .caterpillar import solve_motion_planning
from .errors import InternalStuck, ValidationFailed
from .instance import (
    GatherHolesProblem,
    MotionPlanningProblem,
    PMTProblem,
    UnlabeledProblem,
    goal_reached,
    require_assumption,
    validate_instance,
)
from .plans import Plan, Variant, apply_plan, reverse_plan
from .unlabeled import gather_holes, solve_unlabeled

_targets_cache = {}


def _leaf_neighbor(view, v):
    ws = view.neighbors(v)
    return ws[0] if ws else None


def _candidate_order(view, profile, leaves):
    """All of ``leaves`` ordered by removal-safety case, best case first.

    Non-path trees: a leaf at a degree->3 junction first (removal deletes a
    unit corridor), then a leaf on a longer corridor (shortens it), then a
    leaf of a two-leaf degree-3 junction (the merged corridor stays within
    bounds), then the rest.  Path graphs: endpoints by id.  The head of
    the list is the proven-safe choice on plain trees; the tail only
    matters for the verified trans-shipment scan.
    """
    if profile.is_path:
        return sorted(leaves)
    l4, l2, l3 = [], [], []
    for v in leaves:
        nv = _leaf_neighbor(view, v)
        d = view.degree(nv)
        if d > 3:
            l4.append(v)
        elif d == 2:
            l2.append(v)
        else:
            l3.append(v)
    if profile.junction_corridors:
        leaf_set = set(leaves)

        def two_leaf_junction(v):
            nv = _leaf_neighbor(view, v)
            return sum(1 for w in view.neighbors(nv) if w in leaf_set) == 2

        good = [v for v in l3 if two_leaf_junction(v)]
        rest = [v for v in l3 if v not in good]
        l3 = sorted(good) + sorted(rest)
    else:
        l3 = sorted(l3)  # star: any leaf keeps c at 2
    return sorted(l4) + sorted(l2) + l3


def _removal_set(view, leaf):
    """``leaf`` plus any trans-shipment vertex it would strand as a pendant.

    A pendant trans-shipment vertex can host no pebble and carry no path,
    but it would keep its anchor junction's degree up and rob it of a
    parking spot; dropping it preserves the degree >= 2 property that the
    routing geometry relies on.  Its permanent hole leaves the view with
    it, so the feasibility accounting is unchanged.
    """
    drop = {leaf}
    ws = view.neighbors(leaf)
    if ws and view.is_trans_shipment(ws[0]) and view.degree(ws[0]) == 2:
        drop.add(ws[0])
    return drop


def intermediate_targets(tree, pebble_count):
    """Ordered leaf targets t_1..t_k and the tree views T_1..T_k.

    T_1 is the whole tree; T_k+1 removes t_k (and, on trees with
    trans-shipment vertices, any trans-shipment vertex thereby stranded
    as a pendant).  Each t_k is a leaf of T_k whose removal does not
    increase the feasibility constant; in the ts case the non-increase of
    c~ is verified explicitly, scanning the remaining regular leaves if
    the preferred case-split candidate fails.
    """
    key = (id(tree), pebble_count)
    cached = _targets_cache.get(key)
    if cached is not None and cached[0] is tree:
        return cached[1], cached[2]

    ts_tree = bool(tree.trans_shipment_vertices)
    c_cap = tr.analyze(tree).c_tilde if ts_tree else None
    targets = []
    views = []
    view = tree
    for _ in range(pebble_count):
        views.append(view)
        profile = tr.analyze(view)
        leaves = [v for v in view.vertices() if view.degree(v) <= 1]
        if ts_tree:
            leaves = [v for v in leaves if view.is_regular(v)]
        if not leaves:
            raise InternalStuck("no removable leaf for an intermediate target")
        pick = drop = None
        fallback = None
        for cand in _candidate_order(view, profile, leaves):
            if not ts_tree:
                pick, drop = cand, {cand}
                break
            cand_drop = _removal_set(view, cand)
            after = tr.analyze(view.without(cand_drop))
            if after.c_tilde <= profile.c_tilde:
                pick, drop = cand, cand_drop
                break
            # a cascade-induced corridor merge may push c~ up; any view
            # with c~ at most the original tree's value still satisfies
            # the per-view feasibility arithmetic, so keep it in reserve
            if fallback is None and after.c_tilde <= c_cap:
                fallback = (cand, cand_drop)
        if pick is None and fallback is not None:
            pick, drop = fallback
        if pick is None:
            raise InternalStuck("every leaf removal would raise the constant")
        targets.append(pick)
        view = view.without(drop)
    result = (tuple(targets), tuple(views))
    _targets_cache[key] = (tree, result[0], result[1])
    return result


def solve_pmt(instance):
    """Plan for a labeled instance: f = f_1 .. f_|P| g^-1."""
    validate_instance(instance)
    tree, variant, prob = instance.tree, instance.variant, instance.problem
    p_count = prob.start.pebble_count
    require_assumption(tree, p_count, variant)
    if p_count == 0:
        return Plan(())

    targets, views = intermediate_targets(tree, p_count)
    g = solve_unlabeled(tree, prob.target, frozenset(targets), variant)
    inter = apply_plan(tree, prob.target, g, variant)
    pebble_at_target = {inter.position(p): p for p in range(p_count)}

    cur = prob.start
    moves = []
    for k in range(p_count):
        pk = pebble_at_target[targets[k]]
        fk = solve_motion_planning(views[k], cur, pk, targets[k], variant)
        cur = apply_plan(tree, cur, fk, variant)
        moves.extend(fk)
    g_inv = reverse_plan(g)
    cur = apply_plan(tree, cur, g_inv, variant)
    if cur.positions != prob.target.positions:
        raise ValidationFailed("labeled endpoint mismatch after g reversal")
    moves.extend(g_inv)
    return Plan(moves)


def solve(instance):
    """Uniform dispatcher; replays the plan and checks the goal before returning."""
    validate_instance(instance)
    tree, variant, prob = instance.tree, instance.variant, instance.problem
    if isinstance(prob, PMTProblem):
        plan = solve_pmt(instance)
    elif isinstance(prob, UnlabeledProblem):
        plan = solve_unlabeled(tree, prob.start, prob.destinations, variant)
    elif isinstance(prob, MotionPlanningProblem):
        plan = solve_motion_planning(tree, prob.start, prob.pebble, prob.target, variant)
    elif isinstance(prob, GatherHolesProblem):
        plan = gather_holes(tree, prob.start, prob.subtree, variant)
    else:
        raise ValueError(f"unknown problem type {type(prob).__name__}")
    final = apply_plan(tree, prob.start, plan, variant)
    if not goal_reached(instance, final):
        raise ValidationFailed(f"{instance.kind} plan does not reach its goal")
    return plan

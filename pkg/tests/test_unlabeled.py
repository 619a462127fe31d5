"""Leaf-pruning unlabeled solver and the gather-holes routine."""

import itertools
import random

import pytest

from pebbletree import (
    Configuration,
    Plan,
    Tree,
    analyze,
    apply_plan,
    gather_holes,
    solve_unlabeled,
    vertex_crossings,
)
from pebbletree.errors import (
    InfeasibleAssumption,
    NotConnectedSubtree,
    NotEnoughHoles,
)
from pebbletree.plans import Variant

from conftest import random_configuration, random_tree

from test_tree import fig4_tree


# -- solve_unlabeled ---------------------------------------------------------

def test_already_solved_needs_no_moves():
    tree = Tree(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    cfg = Configuration(5, [0, 2])
    plan = solve_unlabeled(tree, cfg, {0, 2})
    assert apply_plan(tree, cfg, plan).pebble_vertices() == {0, 2}
    assert len(plan) == 0


def test_single_pebble_down_a_path():
    tree = Tree(3, [(0, 1), (1, 2)])
    plan = solve_unlabeled(tree, Configuration(3, [0]), {2})
    assert plan == Plan([(0, 1), (1, 2)])


def test_random_instances_reach_destinations_within_bound():
    rng = random.Random(31)
    done = 0
    while done < 200:
        n = rng.randint(3, 100)
        tree = random_tree(rng, n)
        c = analyze(tree).c
        if n - c < 1:
            continue
        p = rng.randint(1, n - c)
        cfg = random_configuration(rng, tree, p)
        dest = frozenset(rng.sample(range(n), p))
        plan = solve_unlabeled(tree, cfg, dest)
        assert len(plan) <= n * n
        assert apply_plan(tree, cfg, plan).pebble_vertices() == dest
        done += 1


def test_exhaustive_small_trees_never_stuck(small_trees):
    # every source/destination pair on every tree shape with |H| >= c
    for tree in small_trees:
        n = tree.n
        c = analyze(tree).c
        for p in range(1, n - c + 1):
            for src in itertools.combinations(range(n), p):
                cfg = Configuration(n, src)
                for dst in itertools.combinations(range(n), p):
                    plan = solve_unlabeled(tree, cfg, set(dst))
                    out = apply_plan(tree, cfg, plan)
                    assert out.pebble_vertices() == set(dst)


def test_rejects_hole_deficit():
    tree = Tree(3, [(0, 1), (1, 2)])  # c = 2, so two pebbles are too many
    with pytest.raises(InfeasibleAssumption):
        solve_unlabeled(tree, Configuration(3, [0, 1]), {1, 2})


def test_ts_destinations_must_be_regular():
    tree = Tree(4, [(0, 1), (1, 2), (1, 3)], trans_shipment=[1])
    with pytest.raises(InfeasibleAssumption):
        solve_unlabeled(tree, Configuration(4, [0]), {1}, Variant.TRANS_SHIPMENT)


def test_ts_random_instances():
    rng = random.Random(32)
    done = 0
    while done < 60:
        n = rng.randint(5, 60)
        tree = random_tree(rng, n, ts_density=0.12)
        prof = analyze(tree)
        cap = n - len(tree.trans_shipment_vertices) - prof.c_tilde + 1
        if cap < 1:
            continue
        p = rng.randint(1, cap)
        regs = [v for v in range(n) if tree.is_regular(v)]
        if p > len(regs):
            continue
        cfg = Configuration(n, rng.sample(regs, p))
        dest = frozenset(rng.sample(regs, p))
        plan = solve_unlabeled(tree, cfg, dest, Variant.TRANS_SHIPMENT)
        out = apply_plan(tree, cfg, plan, Variant.TRANS_SHIPMENT)
        assert out.pebble_vertices() == dest
        assert len(plan) <= n * n
        done += 1


# -- gather_holes --------------------------------------------------------------

def test_gather_into_already_empty_subtree():
    tree = Tree(4, [(0, 1), (1, 2), (2, 3)])
    cfg = Configuration(4, [3])
    assert gather_holes(tree, cfg, {0, 1}) == Plan(())


def test_gather_fig4_instance():
    # three holes converge on the occupied 3-vertex spine segment
    tree = fig4_tree()
    holes = {0, 8, 9, 10, 14, 15, 7}
    cfg = Configuration(17, [v for v in range(17) if v not in holes])
    plan = gather_holes(tree, cfg, {3, 4, 5})
    out = apply_plan(tree, cfg, plan)
    assert all(out.is_hole(v) for v in (3, 4, 5))
    assert out.pebble_count == 10


def test_gather_random_bounds_and_crossings():
    rng = random.Random(33)
    done = 0
    while done < 200:
        n = rng.randint(4, 80)
        tree = random_tree(rng, n)
        p = rng.randint(1, n - 2)
        cfg = random_configuration(rng, tree, p)
        # grow a random connected subtree no larger than the hole count
        size = rng.randint(1, n - p)
        seed_v = rng.randrange(n)
        sub = {seed_v}
        frontier = list(tree.neighbors(seed_v))
        while len(sub) < size and frontier:
            v = frontier.pop(rng.randrange(len(frontier)))
            if v in sub:
                continue
            sub.add(v)
            frontier.extend(tree.neighbors(v))
        q = len(sub)
        plan = gather_holes(tree, cfg, sub)
        out = apply_plan(tree, cfg, plan)
        assert not (out.pebble_vertices() & sub)
        assert len(plan) <= n * q
        if plan:
            assert max(vertex_crossings(plan).values()) <= q + 1
        done += 1


def test_gather_only_touches_moved_vertices():
    rng = random.Random(34)
    tree = random_tree(rng, 40)
    cfg = random_configuration(rng, tree, 15)
    sub = set()
    v = 0
    while len(sub) < 6:
        sub.add(v)
        v = tree.neighbors(v)[0] if len(sub) == 1 else v
        nxt = [w for w in tree.neighbors(v) if w not in sub]
        if not nxt:
            break
        v = nxt[0]
    plan = gather_holes(tree, cfg, sub)
    touched = {m.src for m in plan} | {m.dst for m in plan}
    out = apply_plan(tree, cfg, plan)
    for x in range(40):
        if x not in touched:
            assert (cfg.pebble_at(x) is None) == (out.pebble_at(x) is None)


def test_gather_rejects_disconnected_subtree():
    tree = Tree(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotConnectedSubtree):
        gather_holes(tree, Configuration(4, [1]), {0, 3})


def test_gather_rejects_too_few_holes():
    tree = Tree(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(NotEnoughHoles):
        gather_holes(tree, Configuration(4, [0, 1, 2]), {0, 1})


def test_gather_ts_exit_crossing():
    # subtree exit is a trans-shipment vertex: the evicted pebble must
    # cross it without pausing
    tree = Tree(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)], trans_shipment=[2])
    cfg = Configuration(6, [0, 1, 3])
    plan = gather_holes(tree, cfg, {0, 1, 2}, Variant.TRANS_SHIPMENT)
    out = apply_plan(tree, cfg, plan, Variant.TRANS_SHIPMENT)
    assert all(out.is_hole(v) for v in (0, 1, 2))

"""Moves, plan application, reversal, and the two basic plan builders."""

import random

import pytest

from pebbletree import (
    Configuration,
    Move,
    Plan,
    Tree,
    apply_move,
    apply_plan,
    bring_hole,
    move_pebble,
    reverse_plan,
    vertex_crossings,
)
from pebbletree.errors import (
    DestinationOccupied,
    IllegalMoveInPlan,
    NonAdjacentMove,
    PathBlocked,
    PebbleRestsOnTransShipment,
    SourceNotHole,
    TransShipmentSource,
    TransShipmentTarget,
)
from pebbletree.plans import Variant

from conftest import random_configuration, random_tree


def corridor_tree():
    """Five-vertex path w=0..v=4 with branches at 1 and 2 (the alpha/beta example)."""
    return Tree(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6)])


def ts_corridor_tree():
    """Same shape with the middle path vertex marked trans-shipment."""
    return Tree(7, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6)],
                trans_shipment=[2])


def random_walk_plan(rng, tree, config, steps):
    moves = []
    for _ in range(steps):
        options = sorted(
            (u, w)
            for u in config.positions
            for w in tree.neighbors(u)
            if config.is_hole(w)
        )
        if not options:
            break
        u, w = rng.choice(options)
        moves.append(Move(u, w))
        config = apply_move(tree, config, Move(u, w))
    return Plan(moves), config


# -- apply_move -------------------------------------------------------------

def test_move_swaps_pebble_and_hole():
    tree = Tree(2, [(0, 1)])
    cfg = Configuration(2, [0])
    out = apply_move(tree, cfg, Move(0, 1))
    assert out.position(0) == 1
    assert out.is_hole(0)


def test_move_into_pebble_fails():
    tree = Tree(2, [(0, 1)])
    cfg = Configuration(2, [0, 1])
    with pytest.raises(DestinationOccupied):
        apply_move(tree, cfg, Move(0, 1))


def test_move_needs_an_edge():
    tree = Tree(3, [(0, 1), (1, 2)])
    cfg = Configuration(3, [0])
    with pytest.raises(NonAdjacentMove):
        apply_move(tree, cfg, Move(0, 2))


def test_random_moves_conserve_occupancy():
    rng = random.Random(21)
    tree = random_tree(rng, 30)
    cfg = random_configuration(rng, tree, 12)
    plan, final = random_walk_plan(rng, tree, cfg, 100)
    replayed = apply_plan(tree, cfg, plan)
    assert replayed == final
    assert replayed.pebble_count == 12
    assert replayed.hole_count == 18


# -- apply_plan --------------------------------------------------------------

def test_empty_plan_is_identity():
    tree = Tree(2, [(0, 1)])
    cfg = Configuration(2, [0])
    assert apply_plan(tree, cfg, Plan(())) == cfg


def test_shift_along_corridor():
    # pebbles on the path and one branch; the four-move shift frees vertex 4
    tree = corridor_tree()
    cfg = Configuration(7, [4, 3, 2, 1, 5])
    plan = Plan([(1, 0), (2, 1), (3, 2), (4, 3)])
    out = apply_plan(tree, cfg, plan)
    assert out.is_hole(4)
    assert not out.is_hole(0)
    assert out.position(4) == 5  # branch pebble untouched


def test_illegal_move_reports_index():
    tree = Tree(3, [(0, 1), (1, 2)])
    cfg = Configuration(3, [0])
    with pytest.raises(IllegalMoveInPlan) as exc:
        apply_plan(tree, cfg, Plan([(0, 1), (0, 1)]))
    assert exc.value.index == 1


def test_ts_resting_pebble_rejected():
    tree = ts_corridor_tree()
    cfg = Configuration(7, [3])
    plan = Plan([(3, 2)])  # lands on the trans-shipment vertex and stops
    with pytest.raises(PebbleRestsOnTransShipment) as exc:
        apply_plan(tree, cfg, plan, Variant.TRANS_SHIPMENT)
    assert exc.value.index == 0
    # the same plan is fine in the plain variant
    assert apply_plan(tree, cfg, plan).position(0) == 2


def test_ts_transit_pair_accepted():
    tree = ts_corridor_tree()
    cfg = Configuration(7, [3])
    out = apply_plan(tree, cfg, Plan([(3, 2), (2, 1)]), Variant.TRANS_SHIPMENT)
    assert out.position(0) == 1


def test_ts_interrupted_pair_rejected():
    tree = ts_corridor_tree()
    cfg = Configuration(7, [3, 5])
    plan = Plan([(3, 2), (5, 1)])
    with pytest.raises(PebbleRestsOnTransShipment):
        apply_plan(tree, cfg, plan, Variant.TRANS_SHIPMENT)


# -- reverse_plan -------------------------------------------------------------

def test_reverse_trivia():
    assert reverse_plan(Plan(())) == Plan(())
    assert reverse_plan(Plan([(1, 2)])) == Plan([(2, 1)])


def test_reverse_round_trip_random():
    rng = random.Random(22)
    for _ in range(60):
        tree = random_tree(rng, rng.randint(3, 40))
        cfg = random_configuration(rng, tree, rng.randint(1, tree.n - 1))
        plan, final = random_walk_plan(rng, tree, cfg, rng.randint(0, 60))
        back = reverse_plan(plan)
        assert len(back) == len(plan)
        assert apply_plan(tree, final, back) == cfg


def test_reverse_identity_exhaustive_small():
    # plan equivalence f f^-1 ~ empty, quantified over every configuration
    # of a 5-vertex tree on which f is defined
    tree = Tree(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    f = Plan([(0, 1), (1, 2), (4, 3)])
    import itertools

    checked = 0
    for p in range(0, 5):
        for pos in itertools.permutations(range(5), p):
            cfg = Configuration(5, pos)
            try:
                mid = apply_plan(tree, cfg, f)
            except IllegalMoveInPlan:
                continue
            assert apply_plan(tree, mid, reverse_plan(f)) == cfg
            checked += 1
    assert checked > 0


# -- bring_hole ---------------------------------------------------------------

def test_bring_hole_full_corridor():
    tree = corridor_tree()
    cfg = Configuration(7, [4, 3, 2, 1, 5])
    plan = bring_hole(tree, cfg, 0, 4)
    assert plan == Plan([(1, 0), (2, 1), (3, 2), (4, 3)])
    out = apply_plan(tree, cfg, plan)
    assert out.is_hole(4)
    assert out.position(4) == 5


def test_bring_hole_no_pebbles_is_empty():
    tree = Tree(4, [(0, 1), (1, 2), (2, 3)])
    cfg = Configuration(4, [])
    assert bring_hole(tree, cfg, 3, 0) == Plan(())


def test_bring_hole_requires_hole_at_source():
    tree = Tree(3, [(0, 1), (1, 2)])
    cfg = Configuration(3, [2])
    with pytest.raises(SourceNotHole):
        bring_hole(tree, cfg, 2, 0)


def test_bring_hole_ts_crossing_is_atomic():
    # holes at the trans-shipment vertex and the far end; the pebble two
    # slots behind crosses in one paired move
    tree = ts_corridor_tree()
    cfg = Configuration(7, [4, 3, 1, 5])
    plan = bring_hole(tree, cfg, 0, 4, Variant.TRANS_SHIPMENT)
    assert plan == Plan([(1, 0), (3, 2), (2, 1), (4, 3)])
    out = apply_plan(tree, cfg, plan, Variant.TRANS_SHIPMENT)
    assert out.is_hole(4)
    assert out.is_hole(2)


def test_bring_hole_refuses_ts_source():
    tree = ts_corridor_tree()
    cfg = Configuration(7, [4])
    with pytest.raises(TransShipmentSource):
        bring_hole(tree, cfg, 2, 4, Variant.TRANS_SHIPMENT)


def test_bring_hole_leaves_off_path_untouched():
    rng = random.Random(23)
    for _ in range(40):
        tree = random_tree(rng, rng.randint(4, 30))
        holes = [v for v in range(tree.n)]
        cfg = random_configuration(rng, tree, rng.randint(1, tree.n - 2))
        hole = rng.choice([v for v in range(tree.n) if cfg.is_hole(v)])
        v = rng.choice([x for x in range(tree.n) if x != hole])
        from pebbletree import path_between

        path = set(path_between(tree, v, hole))
        out = apply_plan(tree, cfg, bring_hole(tree, cfg, hole, v))
        assert out.is_hole(v)
        for x in range(tree.n):
            if x not in path:
                assert (cfg.pebble_at(x) is None) == (out.pebble_at(x) is None)


# -- move_pebble ---------------------------------------------------------------

def test_walk_pebble_down_corridor():
    tree = corridor_tree()
    cfg = Configuration(7, [4, 5])
    plan = move_pebble(tree, cfg, 4, 0)
    assert len(plan) == 4
    out = apply_plan(tree, cfg, plan)
    assert out.position(0) == 0


def test_walk_to_self_is_empty():
    tree = Tree(2, [(0, 1)])
    cfg = Configuration(2, [0])
    assert move_pebble(tree, cfg, 0, 0) == Plan(())


def test_walk_blocked_path():
    tree = Tree(3, [(0, 1), (1, 2)])
    cfg = Configuration(3, [0, 1])
    with pytest.raises(PathBlocked):
        move_pebble(tree, cfg, 0, 2)


def test_walk_refuses_ts_rest():
    tree = ts_corridor_tree()
    cfg = Configuration(7, [4])
    with pytest.raises(TransShipmentTarget):
        move_pebble(tree, cfg, 4, 2, Variant.TRANS_SHIPMENT)


def test_walk_restores_everything_but_the_walker():
    rng = random.Random(24)
    for _ in range(40):
        tree = random_tree(rng, rng.randint(3, 30))
        cfg = random_configuration(rng, tree, rng.randint(1, max(1, tree.n // 3)))
        p = rng.randrange(cfg.pebble_count)
        v = cfg.position(p)
        from pebbletree import path_between

        empties = [
            x for x in range(tree.n)
            if all(cfg.is_hole(y) for y in path_between(tree, v, x)[1:])
        ]
        if not empties:
            continue
        w = rng.choice(empties)
        out = apply_plan(tree, cfg, move_pebble(tree, cfg, v, w))
        assert out.position(p) == w
        for q in range(cfg.pebble_count):
            if q != p:
                assert out.position(q) == cfg.position(q)


# -- vertex_crossings ------------------------------------------------------------

def test_crossings_empty():
    assert vertex_crossings(Plan(())) == {}


def test_crossings_counts_destinations():
    plan = Plan([(1, 2), (2, 3)])
    assert vertex_crossings(plan) == {2: 1, 3: 1}

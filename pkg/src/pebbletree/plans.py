"""Configurations, moves, plans, and the two basic plan builders.

A configuration assigns each pebble to a vertex; unassigned vertices are
holes.  Holes are anonymous: two configurations compare equal exactly when
their pebble position maps agree.  A move ``u -> v`` is legal when (u, v)
is an edge and v is a hole; applying it exchanges the occupants of u and v.

In the trans-shipment variant a pebble may land on a trans-shipment vertex
only if the very next move immediately takes it off again; the pair is the
atomic unit the validator accepts.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from . import tree as tr
from .errors import (
    DestinationOccupied,
    IllegalMoveInPlan,
    NonAdjacentMove,
    PathBlocked,
    PebbleRestsOnTransShipment,
    SourceNotHole,
    TransShipmentSource,
    TransShipmentTarget,
)

HOLE = -1


class Variant(enum.Enum):
    PLAIN = "plain"
    TRANS_SHIPMENT = "ts"


class Move(NamedTuple):
    src: int
    dst: int

    def flipped(self):
        return Move(self.dst, self.src)


class Plan:
    """Immutable ordered sequence of moves."""

    __slots__ = ("moves",)

    def __init__(self, moves=()):
        self.moves = tuple(
            m if type(m) is Move else Move(*m) for m in moves
        )

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __getitem__(self, i):
        return self.moves[i]

    def __add__(self, other):
        return Plan(self.moves + other.moves)

    def __eq__(self, other):
        return isinstance(other, Plan) and self.moves == other.moves

    def __hash__(self):
        return hash(self.moves)

    def __repr__(self):
        return f"Plan({list(self.moves)!r})"


EMPTY_PLAN = Plan()


class Configuration:
    """Bijection between pebbles 0..p-1 and occupied vertices of a tree on n vertices.

    ``positions[i]`` is the vertex of pebble ``i``; ``occupant[v]`` is the
    pebble at ``v`` or ``HOLE``.  Value type: all operations return new
    configurations.  Equality and hashing ignore hole identity.
    """

    __slots__ = ("n", "positions", "occupant")

    def __init__(self, n, positions):
        positions = tuple(positions)
        occupant = [HOLE] * n
        for i, v in enumerate(positions):
            if not 0 <= v < n:
                raise ValueError(f"pebble {i} placed outside the tree at {v}")
            if occupant[v] != HOLE:
                raise ValueError(f"pebbles {occupant[v]} and {i} both at vertex {v}")
            occupant[v] = i
        self.n = n
        self.positions = positions
        self.occupant = tuple(occupant)

    @property
    def pebble_count(self):
        return len(self.positions)

    @property
    def hole_count(self):
        return self.n - len(self.positions)

    def position(self, pebble):
        return self.positions[pebble]

    def pebble_at(self, v):
        """Pebble id at ``v`` or None when v is a hole."""
        p = self.occupant[v]
        return None if p == HOLE else p

    def is_hole(self, v):
        return self.occupant[v] == HOLE

    def holes(self):
        return (v for v in range(self.n) if self.occupant[v] == HOLE)

    def pebble_vertices(self):
        return frozenset(self.positions)

    def __eq__(self, other):
        return (
            isinstance(other, Configuration)
            and self.n == other.n
            and self.positions == other.positions
        )

    def __hash__(self):
        return hash((self.n, self.positions))

    def __repr__(self):
        return f"Configuration(n={self.n}, positions={self.positions})"


def _check_move(tree, occupant, move):
    u, v = move
    if v not in tree.neighbors(u):
        raise NonAdjacentMove(f"({u}, {v}) is not an edge")
    if occupant[v] != HOLE:
        raise DestinationOccupied(f"vertex {v} is occupied")


def apply_move(tree, config, move):
    """Apply one move; the destination must be an adjacent hole."""
    move = Move(*move)
    _check_move(tree, config.occupant, move)
    positions = list(config.positions)
    p = config.occupant[move.src]
    if p != HOLE:
        positions[p] = move.dst
    return Configuration(config.n, positions)


def apply_plan(tree, config, plan, variant=Variant.PLAIN):
    """Fold a plan over a configuration, validating every move.

    In the trans-shipment variant, any move landing a pebble on a
    trans-shipment vertex must be immediately followed by a move taking
    that pebble off it, and no pebble may end the plan on one.
    """
    ts_mode = variant is Variant.TRANS_SHIPMENT
    occupant = list(config.occupant)
    positions = list(config.positions)
    if ts_mode:
        for v in positions:
            if tree.is_trans_shipment(v):
                raise PebbleRestsOnTransShipment(-1)
    pending_ts = None  # vertex a pebble must leave with the next move
    for i, move in enumerate(plan):
        u, v = move
        if pending_ts is not None and u != pending_ts:
            raise PebbleRestsOnTransShipment(i - 1)
        try:
            _check_move(tree, occupant, move)
        except (NonAdjacentMove, DestinationOccupied) as exc:
            raise IllegalMoveInPlan(i, exc) from exc
        p = occupant[u]
        occupant[u] = HOLE
        occupant[v] = p
        if p != HOLE:
            positions[p] = v
        pending_ts = v if (ts_mode and p != HOLE and tree.is_trans_shipment(v)) else None
    if pending_ts is not None:
        raise PebbleRestsOnTransShipment(len(plan) - 1)
    return Configuration(config.n, positions)


def reverse_plan(plan):
    """The reverse plan: flipped moves in reverse order, same length."""
    return Plan(m.flipped() for m in reversed(plan.moves))


def bring_hole(tree, config, w, v, variant=Variant.PLAIN):
    """Plan that shifts each pebble on the v..w path one step toward ``w``.

    Requires a hole at ``w`` (a regular vertex in the ts variant) and
    v != w.  After application ``v`` is a hole and nothing off the path
    changes.  A pebble whose next slot is a trans-shipment vertex crosses
    it in one atomic move pair.
    """
    if not config.is_hole(w):
        raise SourceNotHole(f"vertex {w} does not hold a hole")
    if v == w:
        raise ValueError("bring_hole needs distinct endpoints")
    if variant is Variant.TRANS_SHIPMENT and tree.is_trans_shipment(w):
        raise TransShipmentSource(f"cannot route the hole at trans-shipment vertex {w}")
    path = tr.path_between(tree, v, w)
    moves = []
    for j in range(len(path) - 2, -1, -1):
        if config.is_hole(path[j]):
            continue
        nxt = path[j + 1]
        if variant is Variant.TRANS_SHIPMENT and tree.is_trans_shipment(nxt):
            moves.append(Move(path[j], nxt))
            moves.append(Move(nxt, path[j + 2]))
        else:
            moves.append(Move(path[j], nxt))
    return Plan(moves)


def move_pebble(tree, config, v, w, variant=Variant.PLAIN):
    """Plan walking the single pebble at ``v`` along the empty path to ``w``."""
    if v == w:
        return EMPTY_PLAN
    if config.is_hole(v):
        raise PathBlocked(f"no pebble at {v} to move")
    if variant is Variant.TRANS_SHIPMENT and tree.is_trans_shipment(w):
        raise TransShipmentTarget(f"pebble may not rest on trans-shipment vertex {w}")
    path = tr.path_between(tree, v, w)
    for x in path[1:]:
        if not config.is_hole(x):
            raise PathBlocked(f"vertex {x} on the {v}..{w} path is occupied")
    return Plan(Move(path[i], path[i + 1]) for i in range(len(path) - 1))


def vertex_crossings(plan):
    """Arrivals per vertex: how many moves end at each vertex."""
    counts = {}
    for move in plan:
        counts[move.dst] = counts.get(move.dst, 0) + 1
    return counts

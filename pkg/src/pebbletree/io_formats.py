"""Line-oriented text formats for instances and plans.

Both formats are diff-friendly fixtures: one datum per line, canonical
field order, and a plan trailer (move count plus per-vertex crossing
histogram) that parsing verifies.  ``parse(serialize(x))`` round-trips
exactly, and serializing a parsed valid document is byte-identical.
"""

from __future__ import annotations

from .errors import InstanceParseError
from .instance import (
    GatherHolesProblem,
    Instance,
    MotionPlanningProblem,
    PMTProblem,
    UnlabeledProblem,
    validate_instance,
)
from .plans import Configuration, Move, Plan, Variant, vertex_crossings
from .tree import Tree

INSTANCE_HEADER = "pebbletree-instance v1"
PLAN_HEADER = "pebbletree-plan v1"


def _fmt_config(config):
    return " ".join(f"{p}:{v}" for p, v in enumerate(config.positions))


def serialize_instance(instance):
    tree, variant, prob = instance.tree, instance.variant, instance.problem
    lines = [INSTANCE_HEADER, f"variant {variant.value}", f"n {tree.n}"]
    for u in range(tree.n):
        for v in tree.adj[u]:
            if u < v:
                lines.append(f"edge {u} {v}")
    if tree.trans_shipment_vertices:
        lines.append("ts " + " ".join(map(str, sorted(tree.trans_shipment_vertices))))
    lines.append(f"kind {prob.kind}")
    lines.append("start " + _fmt_config(prob.start))
    if isinstance(prob, PMTProblem):
        lines.append("target " + _fmt_config(prob.target))
    elif isinstance(prob, UnlabeledProblem):
        lines.append("destinations " + " ".join(map(str, sorted(prob.destinations))))
    elif isinstance(prob, MotionPlanningProblem):
        lines.append(f"pebble {prob.pebble}")
        lines.append(f"goal {prob.target}")
    elif isinstance(prob, GatherHolesProblem):
        lines.append("subtree " + " ".join(map(str, sorted(prob.subtree))))
    return "\n".join(lines) + "\n"


def _ints(tokens, lineno, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InstanceParseError(lineno, f"bad {what}: {' '.join(tokens)}") from None


def _parse_positions(tokens, lineno):
    pairs = {}
    for tok in tokens:
        try:
            p, v = tok.split(":")
            pairs[int(p)] = int(v)
        except ValueError:
            raise InstanceParseError(lineno, f"bad pebble:vertex pair {tok!r}") from None
    if sorted(pairs) != list(range(len(pairs))):
        raise InstanceParseError(lineno, "pebble ids must be dense 0..p-1")
    return [pairs[p] for p in range(len(pairs))]


def parse_instance(text):
    lines = text.splitlines()
    if not lines or lines[0].strip() != INSTANCE_HEADER:
        raise InstanceParseError(1, f"expected header {INSTANCE_HEADER!r}")
    fields = {}
    edges = []
    order = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *tokens = line.split()
        if key == "edge":
            if len(tokens) != 2:
                raise InstanceParseError(lineno, "edge wants two endpoints")
            edges.append(tuple(_ints(tokens, lineno, "edge")))
        elif key in ("variant", "n", "ts", "kind", "start", "target",
                     "destinations", "pebble", "goal", "subtree"):
            if key in fields:
                raise InstanceParseError(lineno, f"duplicate field {key!r}")
            fields[key] = (tokens, lineno)
            order.append(key)
        else:
            raise InstanceParseError(lineno, f"unknown field {key!r}")

    def need(key):
        if key not in fields:
            raise InstanceParseError(len(lines), f"missing field {key!r}")
        return fields[key]

    tokens, lineno = need("variant")
    try:
        variant = Variant(tokens[0]) if tokens else None
    except ValueError:
        variant = None
    if variant is None:
        raise InstanceParseError(lineno, "variant must be 'plain' or 'ts'")
    tokens, lineno = need("n")
    if len(tokens) != 1:
        raise InstanceParseError(lineno, "n wants one integer")
    (n,) = _ints(tokens, lineno, "vertex count")
    ts = []
    if "ts" in fields:
        tokens, lineno = fields["ts"]
        ts = _ints(tokens, lineno, "trans-shipment list")
    try:
        tree = Tree(n, edges, ts)
    except ValueError as exc:
        raise InstanceParseError(len(lines), str(exc)) from None

    tokens, lineno = need("kind")
    kind = tokens[0] if tokens else ""
    tokens, lineno = need("start")
    try:
        start = Configuration(n, _parse_positions(tokens, lineno))
    except ValueError as exc:
        raise InstanceParseError(lineno, str(exc)) from None

    if kind == "pmt":
        tokens, lineno = need("target")
        try:
            target = Configuration(n, _parse_positions(tokens, lineno))
        except ValueError as exc:
            raise InstanceParseError(lineno, str(exc)) from None
        problem = PMTProblem(start, target)
    elif kind == "unlabeled":
        tokens, lineno = need("destinations")
        problem = UnlabeledProblem(start, frozenset(_ints(tokens, lineno, "destination")))
    elif kind == "motion":
        tokens, lineno = need("pebble")
        (pebble,) = _ints(tokens, lineno, "pebble id")
        tokens, lineno = need("goal")
        (goal,) = _ints(tokens, lineno, "goal vertex")
        problem = MotionPlanningProblem(start, pebble, goal)
    elif kind == "gather":
        tokens, lineno = need("subtree")
        problem = GatherHolesProblem(start, frozenset(_ints(tokens, lineno, "subtree vertex")))
    else:
        raise InstanceParseError(fields["kind"][1], f"unknown kind {kind!r}")

    instance = Instance(tree, variant, problem)
    try:
        validate_instance(instance)
    except ValueError as exc:
        raise InstanceParseError(len(lines), str(exc)) from None
    return instance


def serialize_plan(plan):
    lines = [PLAN_HEADER]
    lines.extend(f"{m.src} -> {m.dst}" for m in plan)
    lines.append(f"moves {len(plan)}")
    crossings = vertex_crossings(plan)
    hist = " ".join(f"{v}:{crossings[v]}" for v in sorted(crossings))
    lines.append(("crossings " + hist).rstrip())
    return "\n".join(lines) + "\n"


def parse_plan(text):
    lines = text.splitlines()
    if not lines or lines[0].strip() != PLAN_HEADER:
        raise InstanceParseError(1, f"expected header {PLAN_HEADER!r}")
    moves = []
    declared_count = None
    declared_hist = None
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("moves "):
            declared_count = _ints(line.split()[1:], lineno, "move count")[0]
        elif line == "crossings" or line.startswith("crossings "):
            declared_hist = {}
            for tok in line.split()[1:]:
                try:
                    v, c = tok.split(":")
                    declared_hist[int(v)] = int(c)
                except ValueError:
                    raise InstanceParseError(lineno, f"bad crossing entry {tok!r}") from None
        else:
            parts = line.split()
            if len(parts) != 3 or parts[1] != "->":
                raise InstanceParseError(lineno, f"expected 'u -> v', got {line!r}")
            u, v = _ints([parts[0], parts[2]], lineno, "move")
            moves.append(Move(u, v))
    plan = Plan(moves)
    if declared_count is None or declared_hist is None:
        raise InstanceParseError(len(lines), "missing 'moves' or 'crossings' trailer")
    if declared_count != len(plan):
        raise InstanceParseError(len(lines), f"trailer says {declared_count} moves, found {len(plan)}")
    if declared_hist != vertex_crossings(plan):
        raise InstanceParseError(len(lines), "crossing histogram does not match the moves")
    return plan

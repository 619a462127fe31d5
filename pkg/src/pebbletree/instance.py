"""Problem instances: one tree, one variant, one of four goal kinds."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleAssumption
from .plans import Configuration, Variant
from .tree import Tree, analyze


@dataclass(frozen=True)
class PMTProblem:
    """Labeled repositioning: every pebble must reach its own target vertex."""

    start: Configuration
    target: Configuration
    kind = "pmt"


@dataclass(frozen=True)
class UnlabeledProblem:
    """Anonymous repositioning: the pebble set must end up on ``destinations``."""

    start: Configuration
    destinations: frozenset
    kind = "unlabeled"


@dataclass(frozen=True)
class MotionPlanningProblem:
    """Single marked pebble must reach ``target``; others are movable obstacles."""

    start: Configuration
    pebble: int
    target: int
    kind = "motion"


@dataclass(frozen=True)
class GatherHolesProblem:
    """The connected ``subtree`` must end up free of pebbles."""

    start: Configuration
    subtree: frozenset
    kind = "gather"


@dataclass(frozen=True)
class Instance:
    tree: Tree
    variant: Variant
    problem: object  # one of the four problem dataclasses

    @property
    def kind(self):
        return self.problem.kind

    @property
    def start(self):
        return self.problem.start


def assumption_holds(tree, pebble_count, variant):
    """The variant-appropriate hole-count feasibility inequality.

    Plain: |H| >= c(T).  Trans-shipment: |H| >= |V_T| + c~ - 1.
    """
    profile = analyze(tree)
    holes = tree.vertex_count() - pebble_count
    if variant is Variant.TRANS_SHIPMENT:
        return holes >= len(tree.trans_shipment_vertices) + profile.c_tilde - 1
    return holes >= profile.c


def require_assumption(tree, pebble_count, variant):
    if not assumption_holds(tree, pebble_count, variant):
        raise InfeasibleAssumption(
            f"{tree.vertex_count() - pebble_count} holes do not satisfy the "
            f"{variant.value} feasibility assumption"
        )


def validate_instance(instance):
    """Structural checks: configurations fit the tree, resting spots are regular.

    Raises ``ValueError`` on malformed data.  The feasibility assumption is
    deliberately not checked here; solvers raise ``InfeasibleAssumption``.
    """
    tree, variant, prob = instance.tree, instance.variant, instance.problem
    n = tree.vertex_count()

    def check_config(config, label):
        if config.n != n:
            raise ValueError(f"{label} configuration is on {config.n} vertices, tree has {n}")
        if variant is Variant.TRANS_SHIPMENT:
            for v in config.positions:
                if tree.is_trans_shipment(v):
                    raise ValueError(f"{label} places a pebble on trans-shipment vertex {v}")

    check_config(prob.start, "start")
    if isinstance(prob, PMTProblem):
        check_config(prob.target, "target")
        if prob.target.pebble_count != prob.start.pebble_count:
            raise ValueError("start and target disagree on the number of pebbles")
    elif isinstance(prob, UnlabeledProblem):
        if len(prob.destinations) != prob.start.pebble_count:
            raise ValueError("destination count must equal pebble count")
        for v in prob.destinations:
            if not tree.has_vertex(v):
                raise ValueError(f"destination {v} is not a vertex")
            if variant is Variant.TRANS_SHIPMENT and tree.is_trans_shipment(v):
                raise ValueError(f"destination {v} is a trans-shipment vertex")
    elif isinstance(prob, MotionPlanningProblem):
        if not 0 <= prob.pebble < prob.start.pebble_count:
            raise ValueError(f"no pebble {prob.pebble}")
        if not tree.has_vertex(prob.target):
            raise ValueError(f"target {prob.target} is not a vertex")
        if variant is Variant.TRANS_SHIPMENT and tree.is_trans_shipment(prob.target):
            raise ValueError(f"target {prob.target} is a trans-shipment vertex")
    elif isinstance(prob, GatherHolesProblem):
        for v in prob.subtree:
            if not tree.has_vertex(v):
                raise ValueError(f"subtree vertex {v} is not a vertex")
    else:
        raise ValueError(f"unknown problem type {type(prob).__name__}")
    return instance


def goal_reached(instance, config):
    """Does ``config`` satisfy the instance goal?"""
    prob = instance.problem
    if isinstance(prob, PMTProblem):
        return config.positions == prob.target.positions
    if isinstance(prob, UnlabeledProblem):
        return config.pebble_vertices() == prob.destinations
    if isinstance(prob, MotionPlanningProblem):
        return config.position(prob.pebble) == prob.target
    if isinstance(prob, GatherHolesProblem):
        return not (config.pebble_vertices() & prob.subtree)
    raise ValueError(f"unknown problem type {type(prob).__name__}")

"""Pebble motion on trees: feasible-plan solvers with verified length bounds.

Solves four problems on trees whose vertices hold labeled pebbles and
anonymous holes: labeled repositioning, unlabeled repositioning, single
marked-pebble routing, and gathering holes into a subtree -- each in a
plain variant and a trans-shipment variant where designated vertices can
be crossed but never occupied at rest.
"""

from .bounds import (
    crossing_bound,
    gather_length_bound,
    motion_length_bound,
    pmt_length_bound,
    unlabeled_length_bound,
)
from .caterpillar import (
    CaterpillarDecomposition,
    build_caterpillar_sets,
    procedure_a,
    procedure_b,
    solve_motion_planning,
)
from .errors import *  # noqa: F401,F403 -- flat error namespace
from .generate import generate_random_instance, random_tree_edges
from .instance import (
    GatherHolesProblem,
    Instance,
    MotionPlanningProblem,
    PMTProblem,
    UnlabeledProblem,
    assumption_holds,
    goal_reached,
    validate_instance,
)
from .io_formats import (
    parse_instance,
    parse_plan,
    serialize_instance,
    serialize_plan,
)
from .oracle import OracleOutcome, OracleResult, bfs_solve, check_assumption, reachable_configurations
from .plans import (
    Configuration,
    Move,
    Plan,
    Variant,
    apply_move,
    apply_plan,
    bring_hole,
    move_pebble,
    reverse_plan,
    vertex_crossings,
)
from .pmt import intermediate_targets, solve, solve_pmt
from .tree import (
    CorridorProfile,
    Tree,
    TreeView,
    analyze,
    closest_subset,
    distance,
    forest_component,
    path_between,
)
from .unlabeled import gather_holes, solve_unlabeled

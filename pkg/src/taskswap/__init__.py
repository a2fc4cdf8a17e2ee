"""Shortest adjacent task-swap plans on agent networks, with a brute-force oracle."""
from .cost import CostParams, benefit_report, migration_cost, reassignment_benefit
from .errors import (
    CapExceededError,
    NotATreeError,
    PermutationError,
    PlannerInvariantError,
    SizeMismatchError,
    TaskSwapError,
    TopologyError,
    UnknownTopologyError,
    UnreachableError,
    UnstableDisplacementError,
)
from .oracle import CayleyFamily, bfs_distance, cayley_diameter, diameter_survey, shortest_plan
from .perm import (
    CycleDecomposition,
    Permutation,
    Transposition,
    apply_swap,
    compose,
    disjoint_cycles,
    identity,
    inverse,
    inversion_number,
)
from .plan import PlanCheck, SwapPlan, apply_plan, check_plan
from .planners import (
    DisplacementVector,
    displacement_vector,
    plan,
    ring_inversion,
    stabilize,
)
from .topology import TaskSwapGraph, TopologySpec, build_graph

__version__ = "0.1.0"

__all__ = [
    "apply_plan",
    "apply_swap",
    "benefit_report",
    "bfs_distance",
    "build_graph",
    "CapExceededError",
    "cayley_diameter",
    "CayleyFamily",
    "check_plan",
    "compose",
    "CostParams",
    "CycleDecomposition",
    "diameter_survey",
    "disjoint_cycles",
    "displacement_vector",
    "DisplacementVector",
    "identity",
    "inverse",
    "inversion_number",
    "migration_cost",
    "NotATreeError",
    "Permutation",
    "PermutationError",
    "plan",
    "PlanCheck",
    "PlannerInvariantError",
    "reassignment_benefit",
    "ring_inversion",
    "shortest_plan",
    "SizeMismatchError",
    "stabilize",
    "SwapPlan",
    "TaskSwapError",
    "TaskSwapGraph",
    "TopologyError",
    "TopologySpec",
    "Transposition",
    "UnknownTopologyError",
    "UnreachableError",
    "UnstableDisplacementError",
]

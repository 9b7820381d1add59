"""Minimum red-to-blue recolorings that eliminate p-illusion in directed graphs."""
from .cover import build_cover_model, solve_by_cover
from .estimators import IllusionEliminator, check_instance
from .formats import emit_instance, parse_instance, read_instance, write_instance
from .generate import generate_random
from .graph import (
    Instance,
    InstanceError,
    Recoloring,
    StructureMismatch,
    apply_recoloring,
    deficiency,
    illusion_set,
    majority_illusion_set,
    neighbor_counts,
    p_deficiency,
    verify,
)
from .oracle import brute_force_hitting_set, brute_force_min_recoloring, solvable_within
from .ptas import baker_solve
from .reductions import (
    HittingSetInstance,
    RectilinearFormula,
    lift_solutions,
    reduce_hitting_set,
    reduce_rectilinear_3sat,
)
from .rules import rule_single_red_outneighbor
from .solvers import ALGORITHMS, solve
from .structured import (
    solve_directed_cycle,
    solve_directed_tree,
    solve_outward_grid,
    solve_underlying_cycle,
)
from .treewidth import solve_by_treewidth, solve_outerplanar

__all__ = [
    "ALGORITHMS",
    "HittingSetInstance",
    "IllusionEliminator",
    "Instance",
    "InstanceError",
    "Recoloring",
    "RectilinearFormula",
    "StructureMismatch",
    "apply_recoloring",
    "baker_solve",
    "brute_force_hitting_set",
    "brute_force_min_recoloring",
    "build_cover_model",
    "check_instance",
    "deficiency",
    "emit_instance",
    "generate_random",
    "illusion_set",
    "lift_solutions",
    "majority_illusion_set",
    "neighbor_counts",
    "p_deficiency",
    "parse_instance",
    "read_instance",
    "reduce_hitting_set",
    "reduce_rectilinear_3sat",
    "rule_single_red_outneighbor",
    "solvable_within",
    "solve",
    "solve_by_cover",
    "solve_by_treewidth",
    "solve_directed_cycle",
    "solve_directed_tree",
    "solve_outerplanar",
    "solve_outward_grid",
    "solve_underlying_cycle",
    "verify",
    "write_instance",
]
__version__ = "0.1.0"

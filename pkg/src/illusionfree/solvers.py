"""Solver registry and structure-based dispatch."""
from __future__ import annotations

from typing import NamedTuple, Optional

from .cover import solve_by_cover
from .graph import Instance, Recoloring
from .oracle import DEFAULT_MAX_RED, brute_force_min_recoloring
from .ptas import baker_solve
from .structured import (
    solve_directed_cycle,
    solve_directed_tree,
    solve_outward_grid,
    solve_underlying_cycle,
)
from .treedecomp import heuristic_decomposition, underlying_graph
from .treewidth import solve_by_treewidth
from .validators import is_directed_cycle, is_directed_tree, is_outward_grid, is_underlying_cycle

ALGORITHMS = ("auto", "oracle", "cover", "cycle", "ucycle", "outgrid", "tree", "treewidth", "ptas")

# decomposition DP tables grow like 2^w times saturated counters
AUTO_WIDTH_LIMIT = 8


class SolveResult(NamedTuple):
    recoloring: Recoloring
    solver: str
    details: dict


def pick_algorithm(instance: Instance) -> str:
    """Specialized solver if a validator accepts, else treewidth DP or set multicover."""
    if is_directed_cycle(instance):
        return "cycle"
    if is_underlying_cycle(instance):
        return "ucycle"
    if instance.coords is not None and is_outward_grid(instance):
        return "outgrid"
    if is_directed_tree(instance):
        return "tree"
    if heuristic_decomposition(underlying_graph(instance)).width <= AUTO_WIDTH_LIMIT:
        return "treewidth"
    return "cover"


def solve(
    instance: Instance,
    algo: str = "auto",
    demand=None,
    epsilon=1,
    decomposition=None,
    max_red: Optional[int] = DEFAULT_MAX_RED,
) -> SolveResult:
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")
    if algo == "auto":
        algo = pick_algorithm(instance)
    details = {}
    if algo == "oracle":
        rec = brute_force_min_recoloring(instance, demand, max_red=max_red)
    elif algo == "cover":
        rec = solve_by_cover(instance, demand)
    elif algo == "cycle":
        rec = solve_directed_cycle(instance, demand)
    elif algo == "ucycle":
        rec = solve_underlying_cycle(instance, demand)
    elif algo == "outgrid":
        rec = solve_outward_grid(instance, demand)
    elif algo == "tree":
        rec = solve_directed_tree(instance, demand)
    elif algo == "treewidth":
        if decomposition is None:
            decomposition = heuristic_decomposition(underlying_graph(instance))
        details["width"] = decomposition.width
        rec = solve_by_treewidth(instance, demand, decomposition)
    else:
        result = baker_solve(instance, epsilon, demand=demand)
        rec = result.recoloring
        details.update(epsilon=epsilon, k=result.k, shift=result.shift)
    return SolveResult(rec, algo, details)

"""Shifted-layer approximation scheme for planar instances."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, NamedTuple, Optional

from .graph import Instance, Recoloring, resolve_demand
from .layering import compute_layers
from .treewidth import solve_by_treewidth


class BakerResult(NamedTuple):
    recoloring: Recoloring
    k: int
    shift: int
    shift_sizes: tuple


def band_count(epsilon) -> int:
    """``k = ceil(4 / epsilon)``; rounding up keeps the guarantee."""
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    return math.ceil(Fraction(4) / eps)


def induced_piece(instance: Instance, vertices) -> tuple:
    """Induced sub-instance on ``vertices`` plus the local-to-global id map."""
    ids = sorted(vertices)
    local = {v: i for i, v in enumerate(ids)}
    edges = [(local[a], local[b]) for a, b in instance.edges if a in local and b in local]
    colors = "".join(instance.colors[v] for v in ids)
    coords = None if instance.coords is None else [instance.coords[v] for v in ids]
    return Instance(len(ids), edges, colors, instance.p, coords=coords), ids


def shift_pieces(layers, k: int, shift: int) -> list:
    """``(span, inner)`` layer ranges of the pieces for one shift.

    Pieces span ``shift + j(k+1)`` to ``shift + (j+1)(k+1) + 1`` and demand
    the layers strictly inside, so inner ranges tile every layer.
    """
    top = max(layers, default=0)
    pieces = []
    j = -1
    while True:
        lo = shift + j * (k + 1)
        hi = shift + (j + 1) * (k + 1) + 1
        if lo > top:
            break
        if hi - 1 >= 0:
            pieces.append(((lo, hi), (lo + 1, hi - 1)))
        j += 1
    return pieces


def baker_solve(
    instance: Instance,
    epsilon=1,
    piece_solver: Optional[Callable] = None,
    demand=None,
) -> BakerResult:
    """Union of exact piece solutions, minimized over the k shifts.

    ``piece_solver(piece, demand)`` must return an optimal Recoloring for
    the piece with the given demand set; the default is the tree
    decomposition DP.
    """
    k = band_count(epsilon)
    solver = piece_solver or solve_by_treewidth
    layers = compute_layers(instance)
    demand = resolve_demand(instance, demand)
    best = None
    sizes = []
    for shift in range(k):
        chosen = set()
        for (lo, hi), (ilo, ihi) in shift_pieces(layers, k, shift):
            members = [v for v in range(instance.n) if lo <= layers[v] <= hi]
            inner = [v for v in members if ilo <= layers[v] <= ihi and v in demand]
            if not inner:
                continue
            piece, ids = induced_piece(instance, members)
            position = {v: i for i, v in enumerate(ids)}
            result = solver(piece, [position[v] for v in inner])
            chosen.update(ids[i] for i in result.flipped)
        sizes.append(len(chosen))
        if best is None or len(chosen) < len(best[0]):
            best = (chosen, shift)
    return BakerResult(Recoloring(best[0]), k, best[1], tuple(sizes))

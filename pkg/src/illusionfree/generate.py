"""Seeded random instances for every supported graph class."""
from __future__ import annotations

import random
from fractions import Fraction

from .graph import Instance, InstanceError

KINDS = (
    "directed_cycle",
    "underlying_cycle",
    "outward_grid",
    "grid",
    "directed_tree",
    "dag_bipartite",
    "planar_grid",
    "generic",
)


def _colors(rng: random.Random, n: int, red_fraction: float) -> str:
    return "".join("R" if rng.random() < red_fraction else "B" for _ in range(n))


def _grid_shape(n):
    if isinstance(n, tuple):
        rows, cols = n
    else:
        rows = cols = n
    if rows < 1 or cols < 1:
        raise InstanceError("grid dimensions must be positive")
    return rows, cols


def _grid_cells(rows, cols):
    coords = [(r, c) for r in range(rows) for c in range(cols)]
    pairs = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                pairs.append((v, v + 1))
            if r + 1 < rows:
                pairs.append((v, v + cols))
    return coords, pairs


def generate_random(kind: str, n, red_fraction: float = 0.5, p=Fraction(1, 2), seed: int = 0,
                    edge_prob: float = 0.25) -> Instance:
    """Reproducible random instance of the given kind.

    Grid kinds take ``n`` as a side length or a ``(rows, cols)`` pair.
    ``edge_prob`` is the arc probability for ``generic`` and ``dag_bipartite``
    and the deletion probability for ``planar_grid``.
    """
    if kind not in KINDS:
        raise InstanceError(f"unknown generator kind {kind!r}")
    if not 0 <= red_fraction <= 1:
        raise InstanceError("red fraction must lie in [0, 1]")
    rng = random.Random(seed)
    p = Fraction(p)

    if kind in ("outward_grid", "grid", "planar_grid"):
        rows, cols = _grid_shape(n)
        coords, pairs = _grid_cells(rows, cols)
        size = rows * cols
        if kind == "outward_grid":
            edges = pairs
            tag = "outward_grid"
        elif kind == "grid":
            edges = [(a, b) if rng.random() < 0.5 else (b, a) for a, b in pairs]
            tag = "grid"
        else:
            edges = [
                (a, b) if rng.random() < 0.5 else (b, a)
                for a, b in pairs
                if rng.random() >= edge_prob
            ]
            tag = "planar"
        return Instance(size, edges, _colors(rng, size, red_fraction), p, coords=coords, kind=tag)

    if n < 1:
        raise InstanceError("n must be positive")
    colors = _colors(rng, n, red_fraction)
    if kind == "directed_cycle":
        if n < 2:
            raise InstanceError("a directed cycle needs at least two vertices")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return Instance(n, edges, colors, p, kind="directed_cycle")
    if kind == "underlying_cycle":
        if n < 3:
            raise InstanceError("a cycle needs at least three vertices")
        edges = []
        for i in range(n):
            a, b = i, (i + 1) % n
            edges.append((a, b) if rng.random() < 0.5 else (b, a))
        return Instance(n, edges, colors, p, kind="underlying_cycle")
    if kind == "directed_tree":
        edges = []
        for v in range(1, n):
            u = rng.randrange(v)
            edges.append((u, v) if rng.random() < 0.5 else (v, u))
        return Instance(n, edges, colors, p, kind="directed_tree")
    if kind == "dag_bipartite":
        left = max(1, n // 2)
        colors = "B" * left + "".join(
            "R" if rng.random() < red_fraction else "B" for _ in range(n - left)
        )
        edges = [
            (a, b) for a in range(left) for b in range(left, n) if rng.random() < edge_prob
        ]
        return Instance(n, edges, colors, p, kind="generic")
    edges = [
        (a, b) for a in range(n) for b in range(n) if a != b and rng.random() < edge_prob
    ]
    return Instance(n, edges, colors, p, kind="generic")

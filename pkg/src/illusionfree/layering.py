"""Outerplanar layers of grid-embedded instances."""
from __future__ import annotations

from collections import deque

from .graph import Instance, InstanceError


class LayeringError(InstanceError):
    pass


def validate_layering(instance: Instance, layers) -> tuple:
    layers = tuple(int(x) for x in layers)
    if len(layers) != instance.n or min(layers, default=0) < 0:
        raise LayeringError("layering must give a nonnegative index per vertex")
    for a, b in instance.edges:
        if abs(layers[a] - layers[b]) > 1:
            raise LayeringError(
                f"edge ({a}, {b}) joins layers {layers[a]} and {layers[b]}"
            )
    return layers


def _outer_vertices(alive, coords, edges):
    """Vertices touching the unbounded face of a unit-edge grid embedding.

    The embedding is rasterized at double resolution: vertices sit on even
    lattice points, edges on the midpoints between them.  Free lattice points
    connected to the bounding frame form the outer face.
    """
    pts = {(2 * coords[v][0], 2 * coords[v][1]) for v in alive}
    for a, b in edges:
        (r1, c1), (r2, c2) = coords[a], coords[b]
        pts.add((r1 + r2, c1 + c2))
    rows = [p[0] for p in pts]
    cols = [p[1] for p in pts]
    lo_r, hi_r = min(rows) - 1, max(rows) + 1
    lo_c, hi_c = min(cols) - 1, max(cols) + 1
    outside = {(lo_r, lo_c)}
    queue = deque(outside)
    while queue:
        r, c = queue.popleft()
        for nxt in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if lo_r <= nxt[0] <= hi_r and lo_c <= nxt[1] <= hi_c \
                    and nxt not in pts and nxt not in outside:
                outside.add(nxt)
                queue.append(nxt)
    result = set()
    for v in alive:
        r, c = 2 * coords[v][0], 2 * coords[v][1]
        around = [(r + dr, c + dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1) if dr or dc]
        if any(q in outside for q in around):
            result.add(v)
    return result


def compute_layers(instance: Instance) -> tuple:
    """Peeling index of each vertex, or the instance's explicit layering.

    Geometry must be a unit-edge grid embedding; every round removes the
    vertices on the outer face.
    """
    if instance.layers is not None:
        return validate_layering(instance, instance.layers)
    coords = instance.coords
    if coords is None:
        raise LayeringError("instance has neither coordinates nor a layering")
    for a, b in instance.edges:
        (r1, c1), (r2, c2) = coords[a], coords[b]
        if abs(r1 - r2) + abs(c1 - c2) != 1:
            raise LayeringError(f"edge ({a}, {b}) is not a unit grid edge")
    layers = [None] * instance.n
    alive = set(range(instance.n))
    depth = 0
    while alive:
        edges = [(a, b) for a, b in instance.edges if a in alive and b in alive]
        outer = _outer_vertices(alive, coords, edges)
        for v in outer:
            layers[v] = depth
        alive -= outer
        depth += 1
    return validate_layering(instance, layers)

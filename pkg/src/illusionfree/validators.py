"""Structural validators for the graph classes the specialized solvers accept."""
from __future__ import annotations

from .graph import Instance, InstanceError, StructureMismatch


def _connected(n, adj) -> bool:
    if n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def _has_antiparallel(instance: Instance) -> bool:
    edges = set(instance.edges)
    return any((b, a) in edges for a, b in edges)


def is_directed_cycle(instance: Instance) -> bool:
    n = instance.n
    if n < 2 or len(instance.edges) != n:
        return False
    if any(len(x) != 1 for x in instance.out_nbrs):
        return False
    if any(len(x) != 1 for x in instance.in_nbrs):
        return False
    seen, v = set(), 0
    while v not in seen:
        seen.add(v)
        v = instance.out_nbrs[v][0]
    return len(seen) == n


def is_underlying_cycle(instance: Instance) -> bool:
    n = instance.n
    if n < 3 or len(instance.edges) != n or _has_antiparallel(instance):
        return False
    adj = instance.undirected_adjacency()
    return all(len(a) == 2 for a in adj) and _connected(n, adj)


def is_directed_tree(instance: Instance) -> bool:
    n = instance.n
    if n == 0 or len(instance.edges) != n - 1 or _has_antiparallel(instance):
        return False
    return _connected(n, instance.undirected_adjacency())


def is_outward_grid(instance: Instance) -> bool:
    if instance.coords is None:
        return False
    pos = instance.coords
    for a, b in instance.edges:
        (r1, c1), (r2, c2) = pos[a], pos[b]
        if (r2, c2) not in ((r1, c1 + 1), (r1 + 1, c1)):
            return False
    return True


def is_grid_embedded(instance: Instance) -> bool:
    if instance.coords is None or _has_antiparallel(instance):
        return False
    pos = instance.coords
    for a, b in instance.edges:
        (r1, c1), (r2, c2) = pos[a], pos[b]
        if abs(r1 - r2) + abs(c1 - c2) != 1:
            return False
    return True


def is_planar_tagged(instance: Instance) -> bool:
    if instance.layers is not None:
        return True
    return is_grid_embedded(instance)


_CHECKS = {
    "generic": lambda inst: True,
    "directed_cycle": is_directed_cycle,
    "underlying_cycle": is_underlying_cycle,
    "outward_grid": is_outward_grid,
    "directed_tree": is_directed_tree,
    "grid": is_grid_embedded,
    "planar": is_planar_tagged,
}


def matches_kind(instance: Instance, kind: str) -> bool:
    try:
        check = _CHECKS[kind]
    except KeyError:
        raise InstanceError(f"unknown kind tag {kind!r}") from None
    return check(instance)


def check_kind(instance: Instance, kind: str) -> None:
    if not matches_kind(instance, kind):
        raise StructureMismatch(f"instance does not have the structure of a {kind} graph")

"""Exact dynamic program over a nice tree decomposition.

A table entry is keyed by ``(S, z)``: ``S`` is the set of flipped red
vertices of the bag and ``z[i]`` counts flipped red out-neighbors of the
i-th bag vertex seen so far, saturated at that vertex's p-deficiency
(zero for vertices outside the demand).  Forgetting a vertex is where its
constraint is enforced.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, NamedTuple, Optional

from .graph import Instance, Recoloring, p_deficiencies, resolve_demand
from .layering import compute_layers
from .treedecomp import (
    DecompositionError,
    NiceTreeDecomposition,
    TreeDecomposition,
    heuristic_decomposition,
    make_nice,
    underlying_graph,
)

EMPTY = (frozenset(), ())


def _check_covers(instance: Instance, nice: NiceTreeDecomposition) -> None:
    nice.validate()
    forgets = defaultdict(int)
    for node in nice.nodes:
        if node.kind == "forget":
            forgets[node.vertex] += 1
    for v in range(instance.n):
        if forgets[v] != 1:
            raise DecompositionError(f"vertex {v} must be forgotten exactly once")
    bags = [set(node.bag) for node in nice.nodes]
    for a, b in instance.edges:
        if not any(a in bag and b in bag for bag in bags):
            raise DecompositionError(f"edge ({a}, {b}) is not contained in any bag")


def _prepare(instance: Instance, decomposition) -> NiceTreeDecomposition:
    if decomposition is None:
        decomposition = heuristic_decomposition(underlying_graph(instance))
    if isinstance(decomposition, TreeDecomposition):
        decomposition.validate(underlying_graph(instance))
        decomposition = make_nice(decomposition)
    _check_covers(instance, decomposition)
    return decomposition


def _run(instance: Instance, caps: list, thresholds: list, nice: NiceTreeDecomposition):
    outs = [frozenset(x) for x in instance.out_nbrs]
    red = [c == "R" for c in instance.colors]
    tables = []
    backs = []
    for node in nice.nodes:
        table, back = {}, {}

        def offer(key, cost, origin):
            if key not in table or cost < table[key]:
                table[key] = cost
                back[key] = origin

        bag = node.bag
        if node.kind == "leaf":
            offer(EMPTY, 0, None)
        elif node.kind == "introduce":
            v = node.vertex
            child = tables[node.children[0]]
            cbag = nice.nodes[node.children[0]].bag
            choices = (False, True) if red[v] else (False,)
            for (s, z), cost in child.items():
                old = dict(zip(cbag, z))
                for flip in choices:
                    ss = s | {v} if flip else s
                    newz = []
                    for u in bag:
                        if u == v:
                            count = len(ss & outs[v])
                        else:
                            count = old[u] + (1 if flip and v in outs[u] else 0)
                        newz.append(min(caps[u], count))
                    offer((ss, tuple(newz)), cost + flip, (s, z))
        elif node.kind == "forget":
            v = node.vertex
            child = tables[node.children[0]]
            cbag = nice.nodes[node.children[0]].bag
            at = cbag.index(v)
            for (s, z), cost in child.items():
                if z[at] < thresholds[v]:
                    continue
                offer((s - {v}, z[:at] + z[at + 1:]), cost, (s, z))
        else:
            left, right = (tables[c] for c in node.children)
            by_set = defaultdict(list)
            for (s, z), cost in right.items():
                by_set[s].append((z, cost))
            inner = [None] * len(bag)
            for (s, z1), c1 in left.items():
                shared = [len(s & outs[u]) for u in bag]
                for z2, c2 in by_set.get(s, ()):
                    for i, u in enumerate(bag):
                        cap = caps[u]
                        if z1[i] >= cap or z2[i] >= cap:
                            inner[i] = cap
                        else:
                            inner[i] = min(cap, z1[i] + z2[i] - shared[i])
                    offer((s, tuple(inner)), c1 + c2 - len(s), ((s, z1), (s, z2)))
        tables.append(table)
        backs.append(back)
    return tables, backs


def _reconstruct(nice, backs, key=EMPTY):
    flipped = set()
    stack = [(nice.root, key)]
    while stack:
        t, key = stack.pop()
        flipped |= key[0]
        origin = backs[t][key]
        node = nice.nodes[t]
        if node.kind == "join":
            stack.append((node.children[0], origin[0]))
            stack.append((node.children[1], origin[1]))
        elif node.children:
            stack.append((node.children[0], origin))
    return flipped


def solve_by_treewidth(
    instance: Instance,
    demand: Optional[Iterable] = None,
    decomposition=None,
    saturate: bool = True,
) -> Recoloring:
    """Minimum recoloring via the decomposition DP.

    ``decomposition`` may be a nice decomposition, a plain tree
    decomposition, or ``None`` for the min-fill heuristic.  With
    ``saturate=False`` counters run uncapped (a slower reference).
    """
    demand = resolve_demand(instance, demand)
    nice = _prepare(instance, decomposition)
    need = p_deficiencies(instance)
    thresholds = [need[v] if v in demand else 0 for v in range(instance.n)]
    # counters never exceed n - 1, so a cap of n never binds
    caps = thresholds if saturate else [instance.n] * instance.n
    tables, backs = _run(instance, caps, thresholds, nice)
    root = tables[nice.root]
    if EMPTY not in root:
        raise AssertionError("decomposition DP found no feasible recoloring")
    flipped = _reconstruct(nice, backs)
    if len(flipped) != root[EMPTY]:
        raise AssertionError("reconstructed recoloring disagrees with the table value")
    return Recoloring(flipped)


class WidthReport(NamedTuple):
    recoloring: Recoloring
    width: int
    layers: int
    width_bound: int


def solve_outerplanar(instance: Instance, demand: Optional[Iterable] = None) -> WidthReport:
    """Solve a layered planar instance and report width against ``3*layers - 1``."""
    layers = compute_layers(instance)
    depth = max(layers, default=-1) + 1
    td = heuristic_decomposition(underlying_graph(instance))
    recoloring = solve_by_treewidth(instance, demand, td)
    return WidthReport(recoloring, td.width, depth, 3 * depth - 1)

"""Polynomial-time exact solvers for cycles, outward grids and trees."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import (
    Instance,
    Recoloring,
    StructureMismatch,
    apply_recoloring,
    deficiency,
    p_deficiencies,
    resolve_demand,
)
from .matching import minimum_vertex_cover
from .rules import (
    HALF,
    high_p_bounded_outdegree_solve,
    rule_single_red_outneighbor,
)
from .validators import check_kind, is_directed_tree, is_outward_grid, is_underlying_cycle


def solve_directed_cycle(instance: Instance, demand: Optional[Iterable] = None) -> Recoloring:
    check_kind(instance, "directed_cycle")
    if instance.p == 0:
        return Recoloring()
    demand = resolve_demand(instance, demand)
    # a red vertex is the only out-neighbor of its predecessor
    return Recoloring(
        instance.out_nbrs[v][0] for v in demand if instance.is_red(instance.out_nbrs[v][0])
    )


def _bounded_degree_dispatch(instance: Instance, demand):
    """Handles the p > 1/2 and p = 0 cases shared by cycles and outward grids."""
    if instance.p == 0:
        return Recoloring()
    if instance.p > HALF:
        return high_p_bounded_outdegree_solve(instance, demand)
    return None


def solve_underlying_cycle(instance: Instance, demand: Optional[Iterable] = None) -> Recoloring:
    """Greedy elimination on a graph whose underlying undirected graph is a cycle.

    After the single-red-out-neighbor rule, every remaining illusion vertex
    has two red out-neighbors and each red vertex serves at most two illusion
    vertices, so the pairs form paths or a cycle.  Pairs with an endpoint that
    serves nobody else are handled first (cases a and c); the both-shared
    case b is used only when no such pair is left.
    """
    if not is_underlying_cycle(instance):
        raise StructureMismatch("underlying graph is not a cycle")
    demand = resolve_demand(instance, demand)
    shortcut = _bounded_degree_dispatch(instance, demand)
    if shortcut is not None:
        return shortcut
    flipped = set()
    current = instance
    while True:
        forced, _ = rule_single_red_outneighbor(current, demand)
        if forced:
            flipped |= forced
            current = apply_recoloring(current, forced)
        bad = {v for v in demand if deficiency(current, v) > 0}
        if not bad:
            return Recoloring(flipped)
        choice = None
        fallback = None
        for v in sorted(bad):
            r1, r2 = sorted(current.out_nbrs[v])
            shared = [
                r for r in (r1, r2)
                if any(u != v and u in bad for u in current.in_nbrs[r])
            ]
            if len(shared) == 0:
                choice = r1
            elif len(shared) == 1:
                choice = shared[0]
            elif fallback is None:
                fallback = r1
            if choice is not None:
                break
        pick = choice if choice is not None else fallback
        flipped.add(pick)
        current = apply_recoloring(current, [pick])


@dataclass(frozen=True)
class AuxiliaryPairGraph:
    vertices: tuple
    edges: tuple

    def is_acyclic(self) -> bool:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True


def auxiliary_pair_graph(instance: Instance, bad: Iterable) -> AuxiliaryPairGraph:
    edges = set()
    for x in bad:
        outs = instance.out_nbrs[x]
        if len(outs) != 2 or not all(instance.is_red(u) for u in outs):
            raise StructureMismatch(f"vertex {x} does not have two red out-neighbors")
        edges.add(tuple(sorted(outs)))
    return AuxiliaryPairGraph(tuple(sorted(instance.red)), tuple(sorted(edges)))


def solve_outward_grid(instance: Instance, demand: Optional[Iterable] = None, details: bool = False):
    """Forced flips, then a minimum vertex cover of the red pair graph.

    With ``details=True`` returns ``(recoloring, pair_graph, matching_size)``.
    """
    if not is_outward_grid(instance):
        raise StructureMismatch("instance is not an outward grid")
    demand = resolve_demand(instance, demand)
    shortcut = _bounded_degree_dispatch(instance, demand)
    if shortcut is not None:
        return (shortcut, None, 0) if details else shortcut
    forced, _ = rule_single_red_outneighbor(instance, demand)
    reduced = apply_recoloring(instance, forced)
    bad = sorted(v for v in demand if deficiency(reduced, v) > 0)
    pairs = auxiliary_pair_graph(reduced, bad)
    if not pairs.is_acyclic():
        raise StructureMismatch("pair graph of an outward grid must be acyclic")
    cover, matched = minimum_vertex_cover(pairs.vertices, pairs.edges)
    if len(cover) != matched:
        raise AssertionError("König cover size differs from the matching size")
    result = Recoloring(forced | cover)
    return (result, pairs, matched) if details else result


class _TreeDP:
    """Subtree tables keyed by (flipped out-children, own flag).

    The count of flipped out-children saturates at the vertex's own
    p-deficiency, the only threshold it is ever compared with.
    """

    def __init__(self, instance: Instance, demand: frozenset, root: int):
        self.inst = instance
        self.need = [
            d if v in demand else 0 for v, d in enumerate(p_deficiencies(instance))
        ]
        n = instance.n
        adj = instance.undirected_adjacency()
        self.parent = [-1] * n
        order = [root]
        seen = {root}
        for v in order:
            for u in sorted(adj[v]):
                if u not in seen:
                    seen.add(u)
                    self.parent[u] = v
                    order.append(u)
        self.order = order
        out = set(instance.edges)
        self.in_children = [[] for _ in range(n)]
        self.out_children = [[] for _ in range(n)]
        for u in order[1:]:
            p = self.parent[u]
            if (u, p) in out:
                self.in_children[p].append(u)
            else:
                self.out_children[p].append(u)
        self.table = [None] * n
        self.steps = [None] * n

    def flags(self, v):
        return (0, 1) if self.inst.is_red(v) else (0,)

    def best_in_child(self, v, parent_flag):
        """Cheapest state of in-child v given its parent's flag."""
        best = None
        for (z, f), cost in self.table[v].items():
            if z + parent_flag >= self.need[v] and (best is None or cost < best[0]):
                best = (cost, z, f)
        return best

    def best_out_child(self, w, flag):
        best = None
        for (z, f), cost in self.table[w].items():
            if f == flag and z >= self.need[w] and (best is None or cost < best[0]):
                best = (cost, z, f)
        return best

    def run(self):
        for u in reversed(self.order):
            cap = self.need[u]
            base = {}
            for flag in self.flags(u):
                total = flag
                for v in self.in_children[u]:
                    pick = self.best_in_child(v, flag)
                    if pick is None:
                        total = None
                        break
                    total += pick[0]
                if total is not None:
                    base[(0, flag)] = total
            current = base
            steps = []
            for w in self.out_children[u]:
                options = {f: self.best_out_child(w, f) for f in self.flags(w)}
                nxt, back = {}, {}
                for (z, flag), cost in current.items():
                    for f, pick in options.items():
                        if pick is None:
                            continue
                        key = (min(cap, z + f), flag)
                        value = cost + pick[0]
                        if key not in nxt or value < nxt[key]:
                            nxt[key] = value
                            back[key] = ((z, flag), f)
                steps.append((w, back))
                current = nxt
            self.table[u] = current
            self.steps[u] = steps

    def answer(self, root):
        best = None
        for (z, flag), cost in self.table[root].items():
            if z >= self.need[root] and (best is None or cost < best[0]):
                best = (cost, (z, flag))
        if best is None:
            raise AssertionError("no feasible tree state at the root")
        flipped = set()
        self._collect(root, best[1], flipped)
        return best[0], flipped

    def _collect(self, u, key, flipped):
        z, flag = key
        if flag:
            flipped.add(u)
        for w, back in reversed(self.steps[u]):
            key, f = back[key]
            pick = self.best_out_child(w, f)
            self._collect(w, (pick[1], pick[2]), flipped)
        for v in self.in_children[u]:
            pick = self.best_in_child(v, flag)
            self._collect(v, (pick[1], pick[2]), flipped)


def solve_directed_tree(
    instance: Instance, demand: Optional[Iterable] = None, root: int = 0
) -> Recoloring:
    """Exact solver for digraphs whose underlying graph is a tree.

    Demanded leaves under p-illusion force their neighbor first; the rest
    is a bottom-up dynamic program that folds in-children (whose missing
    blue neighbors may come from the parent's flip) and then out-children
    one by one with a saturating counter of flipped out-children.
    """
    if not is_directed_tree(instance):
        raise StructureMismatch("underlying graph is not a tree")
    demand = resolve_demand(instance, demand)
    adj = instance.undirected_adjacency()
    leaves = [v for v in range(instance.n) if len(adj[v]) == 1]
    forced, _ = rule_single_red_outneighbor(instance, demand, vertices=leaves)
    reduced = apply_recoloring(instance, forced)
    dp = _TreeDP(reduced, demand, root)
    dp.run()
    _, flipped = dp.answer(root)
    return Recoloring(set(forced) | flipped)

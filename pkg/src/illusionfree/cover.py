"""Set-multicover view of illusion elimination.

Each demanded vertex under p-illusion becomes a covering constraint: at least
``p_deficiency(v)`` of its red out-neighbors must be chosen.  The exact
solver is a depth-first branch and bound over the elements in id order,
run separately on every connected block of the constraint matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import networkx as nx

from .graph import Instance, Recoloring, p_deficiencies, resolve_demand


@dataclass(frozen=True)
class CoverModel:
    elements: tuple
    constraints: tuple  # of (frozenset of elements, demand, source vertex)

    def __post_init__(self):
        for members, demand, _ in self.constraints:
            if not members:
                raise ValueError("empty covering constraint")
            if not 1 <= demand <= len(members):
                raise ValueError(f"demand {demand} outside 1..{len(members)}")

    def __len__(self):
        return len(self.constraints)

    def pairs(self) -> list:
        return [(set(m), d) for m, d, _ in self.constraints]


def build_cover_model(instance: Instance, demand: Optional[Iterable] = None) -> CoverModel:
    demand = resolve_demand(instance, demand)
    need = p_deficiencies(instance)
    rows = []
    for v in sorted(demand):
        if need[v] > 0:
            reds = frozenset(u for u in instance.out_nbrs[v] if instance.colors[u] == "R")
            rows.append((reds, need[v], v))
    elements = tuple(sorted(set().union(*(r[0] for r in rows)))) if rows else ()
    return CoverModel(elements, tuple(rows))


def primal_graph(model: CoverModel) -> nx.Graph:
    """Elements joined when they share a constraint."""
    g = nx.Graph()
    g.add_nodes_from(model.elements)
    for members, _, _ in model.constraints:
        ordered = sorted(members)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                g.add_edge(a, b)
    return g


def dual_graph(model: CoverModel) -> nx.Graph:
    """Constraints (by position) joined when they share an element."""
    g = nx.Graph()
    g.add_nodes_from(range(len(model.constraints)))
    holders = {}
    for c, (members, _, _) in enumerate(model.constraints):
        for e in members:
            holders.setdefault(e, []).append(c)
    for cs in holders.values():
        for i, a in enumerate(cs):
            for b in cs[i + 1:]:
                g.add_edge(a, b)
    return g


def treedepth_upper_bound(graph: nx.Graph) -> int:
    """Height of a DFS forest.

    In a DFS forest every non-tree edge joins an ancestor to a descendant,
    so the height bounds the treedepth from above.
    """
    height = 0
    depth = {}
    for root in sorted(graph.nodes):
        if root in depth:
            continue
        depth[root] = 1
        stack = [(root, iter(sorted(graph[root])))]
        while stack:
            v, neighbors = stack[-1]
            for u in neighbors:
                if u not in depth:
                    depth[u] = depth[v] + 1
                    stack.append((u, iter(sorted(graph[u]))))
                    break
            else:
                stack.pop()
        height = max(height, max(d for d in depth.values()))
    return height


def _blocks(model: CoverModel) -> list:
    dual = dual_graph(model)
    blocks = []
    for comp in nx.connected_components(dual):
        rows = [model.constraints[c] for c in sorted(comp)]
        blocks.append(rows)
    blocks.sort(key=lambda rows: min(min(m) for m, _, _ in rows))
    return blocks


class _BranchAndBound:
    def __init__(self, rows):
        self.elements = sorted(set().union(*(m for m, _, _ in rows)))
        pos = {e: i for i, e in enumerate(self.elements)}
        self.members = [sorted(pos[e] for e in m) for m, _, _ in rows]
        self.need = [d for _, d, _ in rows]
        self.of = [[] for _ in self.elements]
        for c, mem in enumerate(self.members):
            for i in mem:
                self.of[i].append(c)
        self.residual = list(self.need)
        self.avail = [len(m) for m in self.members]
        self.chosen = []

    def greedy(self) -> list:
        residual = list(self.need)
        chosen = []
        while any(r > 0 for r in residual):
            gain = [sum(1 for c in self.of[i] if residual[c] > 0) if i not in chosen else -1
                    for i in range(len(self.elements))]
            best = max(range(len(gain)), key=lambda i: (gain[i], -i))
            chosen.append(best)
            for c in self.of[best]:
                residual[c] -= 1
        # drop elements made redundant by later picks
        for i in sorted(chosen, reverse=True):
            if all(residual[c] < 0 for c in self.of[i]):
                chosen.remove(i)
                for c in self.of[i]:
                    residual[c] += 1
        return sorted(chosen)

    def lower_bound(self, start: int) -> int:
        open_rows = [c for c, r in enumerate(self.residual) if r > 0]
        if not open_rows:
            return 0
        single = max(self.residual[c] for c in open_rows)
        used = set()
        packed = 0
        for c in sorted(open_rows, key=lambda c: (-self.residual[c], c)):
            rest = {i for i in self.members[c] if i >= start}
            if rest & used:
                continue
            used |= rest
            packed += self.residual[c]
        return max(single, packed)

    def solve(self) -> list:
        self.best = self.greedy()
        self.found = False
        self._search(0)
        return [self.elements[i] for i in self.best]

    def _search(self, i: int) -> None:
        if all(r <= 0 for r in self.residual):
            size = len(self.chosen)
            if size < len(self.best) or (size == len(self.best) and not self.found):
                self.best = list(self.chosen)
                self.found = True
            return
        bound = len(self.chosen) + self.lower_bound(i)
        # before the search finds its own optimum, equal-size subtrees are
        # kept so that the lexicographically first optimum is reached
        if bound > len(self.best) or (self.found and bound >= len(self.best)):
            return
        if i == len(self.elements):
            return
        useful = any(self.residual[c] > 0 for c in self.of[i])
        if useful:
            self.chosen.append(i)
            for c in self.of[i]:
                self.residual[c] -= 1
                self.avail[c] -= 1
            self._search(i + 1)
            for c in self.of[i]:
                self.residual[c] += 1
                self.avail[c] += 1
            self.chosen.pop()
        feasible = True
        for c in self.of[i]:
            self.avail[c] -= 1
            if self.residual[c] > self.avail[c]:
                feasible = False
        if feasible:
            self._search(i + 1)
        for c in self.of[i]:
            self.avail[c] += 1


def solve_cover_exact(model: CoverModel) -> frozenset:
    """Minimum element set meeting every demand, lexicographically first."""
    chosen = set()
    for rows in _blocks(model):
        chosen.update(_BranchAndBound(rows).solve())
    return frozenset(chosen)


def solve_by_cover(instance: Instance, demand: Optional[Iterable] = None) -> Recoloring:
    return Recoloring(solve_cover_exact(build_cover_model(instance, demand)))


def export_lp(model: CoverModel) -> str:
    """CPLEX LP text of the model; variables are ``x<id>`` in id order."""
    lines = ["\\ minimum recoloring as set multicover", "Minimize"]
    terms = " + ".join(f"x{e}" for e in model.elements) or "0 x0"
    lines.append(f" obj: {terms}")
    lines.append("Subject To")
    for members, demand, source in model.constraints:
        row = " + ".join(f"x{e}" for e in sorted(members))
        lines.append(f" v{source}: {row} >= {demand}")
    lines.append("Binary")
    for e in model.elements:
        lines.append(f" x{e}")
    lines.append("End")
    return "\n".join(lines) + "\n"

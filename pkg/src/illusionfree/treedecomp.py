"""Tree decompositions, their nice form, and the PACE ``.td`` text format."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .graph import Instance


class DecompositionError(ValueError):
    pass


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple  # of frozensets
    tree_edges: tuple  # of (i, j) bag index pairs

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, graph: nx.Graph) -> None:
        """Raise DecompositionError unless this decomposes ``graph``."""
        k = len(self.bags)
        if k == 0:
            raise DecompositionError("decomposition has no bags")
        tree = nx.Graph()
        tree.add_nodes_from(range(k))
        for i, j in self.tree_edges:
            if not (0 <= i < k and 0 <= j < k):
                raise DecompositionError(f"tree edge ({i}, {j}) references a missing bag")
            tree.add_edge(i, j)
        if not nx.is_tree(tree):
            raise DecompositionError("bags are not connected as a tree")
        covered = set().union(*self.bags)
        missing = set(graph.nodes) - covered
        if missing:
            raise DecompositionError(f"vertex {min(missing)} appears in no bag")
        for a, b in graph.edges:
            if not any(a in bag and b in bag for bag in self.bags):
                raise DecompositionError(f"edge ({a}, {b}) is not contained in any bag")
        for v in covered:
            holders = [i for i, bag in enumerate(self.bags) if v in bag]
            if not nx.is_connected(tree.subgraph(holders)):
                raise DecompositionError(f"bags holding vertex {v} are not connected")


def underlying_graph(instance: Instance) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(instance.n))
    g.add_edges_from(instance.edges)
    return g


def heuristic_decomposition(graph) -> TreeDecomposition:
    """Min-fill elimination ordering decomposition of an undirected graph."""
    if isinstance(graph, Instance):
        graph = underlying_graph(graph)
    if graph.number_of_nodes() == 0:
        return TreeDecomposition((frozenset(),), ())
    parts = []
    for comp in sorted(nx.connected_components(graph), key=min):
        sub = graph.subgraph(comp).copy()
        if sub.number_of_nodes() == 1:
            parts.append(([frozenset(comp)], []))
            continue
        _, tree = nx.approximation.treewidth_min_fill_in(sub)
        nodes = sorted(tree.nodes, key=lambda b: (len(b), sorted(b)))
        index = {b: i for i, b in enumerate(nodes)}
        edges = sorted(tuple(sorted((index[a], index[b]))) for a, b in tree.edges)
        parts.append((nodes, edges))
    bags, edges = [], []
    for nodes, local in parts:
        offset = len(bags)
        if bags:
            # components are chained through arbitrary bags
            edges.append((offset - 1, offset))
        bags.extend(nodes)
        edges.extend((a + offset, b + offset) for a, b in local)
    td = TreeDecomposition(tuple(frozenset(b) for b in bags), tuple(edges))
    td.validate(graph)
    return td


@dataclass(frozen=True)
class NiceNode:
    kind: str  # leaf, introduce, forget, join
    bag: tuple
    vertex: Optional[int] = None
    children: tuple = ()


@dataclass(frozen=True)
class NiceTreeDecomposition:
    """Nodes listed children-first; the last node is the root."""

    nodes: tuple

    @property
    def root(self) -> int:
        return len(self.nodes) - 1

    @property
    def width(self) -> int:
        return max(len(node.bag) for node in self.nodes) - 1

    def validate(self) -> None:
        for i, node in enumerate(self.nodes):
            bag = set(node.bag)
            kids = [self.nodes[c] for c in node.children]
            if any(c >= i for c in node.children):
                raise DecompositionError("children must precede their parent")
            if node.kind == "leaf":
                ok = not bag and not kids
            elif node.kind == "introduce":
                ok = len(kids) == 1 and bag == set(kids[0].bag) | {node.vertex} \
                    and node.vertex not in kids[0].bag
            elif node.kind == "forget":
                ok = len(kids) == 1 and set(kids[0].bag) == bag | {node.vertex} \
                    and node.vertex not in bag
            elif node.kind == "join":
                ok = len(kids) == 2 and all(set(k.bag) == bag for k in kids)
            else:
                ok = False
            if not ok:
                raise DecompositionError(f"node {i} is not a valid {node.kind} node")
        if self.nodes[self.root].bag:
            raise DecompositionError("root bag must be empty")


def make_nice(decomposition: TreeDecomposition, root: int = 0) -> NiceTreeDecomposition:
    k = len(decomposition.bags)
    if not 0 <= root < k:
        raise DecompositionError(f"root bag {root} does not exist")
    adj = {i: [] for i in range(k)}
    for a, b in decomposition.tree_edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = {root: None}
    order = [root]
    for t in order:
        for u in sorted(adj[t]):
            if u not in parent:
                parent[u] = t
                order.append(u)
    if len(order) != k:
        raise DecompositionError("decomposition tree is disconnected")
    children = {t: [u for u in sorted(adj[t]) if parent[u] == t] for t in range(k)}

    nodes = []

    def add(kind, bag, vertex=None, kids=()):
        nodes.append(NiceNode(kind, tuple(sorted(bag)), vertex, tuple(kids)))
        return len(nodes) - 1

    def move(top, have, want):
        for v in sorted(have - want):
            have = have - {v}
            top = add("forget", have, v, (top,))
        for v in sorted(want - have):
            have = have | {v}
            top = add("introduce", have, v, (top,))
        return top

    top_of = {}
    for t in reversed(order):
        bag = set(decomposition.bags[t])
        tops = []
        if not children[t]:
            tops.append(move(add("leaf", ()), set(), bag))
        for c in children[t]:
            tops.append(move(top_of[c], set(decomposition.bags[c]), bag))
        top = tops[0]
        for other in tops[1:]:
            top = add("join", bag, None, (top, other))
        top_of[t] = top
    move(top_of[root], set(decomposition.bags[root]), set())
    nice = NiceTreeDecomposition(tuple(nodes))
    nice.validate()
    return nice


def write_td(decomposition: TreeDecomposition, n_vertices: int) -> str:
    """PACE format; bag ids and vertex ids are 1-based in the text."""
    lines = [f"s td {len(decomposition.bags)} {decomposition.width + 1} {n_vertices}"]
    for i, bag in enumerate(decomposition.bags, start=1):
        lines.append(" ".join(["b", str(i)] + [str(v + 1) for v in sorted(bag)]))
    for a, b in decomposition.tree_edges:
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def read_td(text: str) -> TreeDecomposition:
    header = None
    bags = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            if parts[0] == "s":
                if parts[1] != "td" or len(parts) != 5:
                    raise ValueError("expected 's td <bags> <width+1> <vertices>'")
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "b":
                bags[int(parts[1])] = frozenset(int(x) - 1 for x in parts[2:])
            else:
                a, b = (int(x) for x in parts)
                edges.append((a - 1, b - 1))
        except (ValueError, IndexError) as exc:
            raise DecompositionError(f"line {lineno}: {exc}") from None
    if header is None:
        raise DecompositionError("missing solution line")
    count = header[0]
    if sorted(bags) != list(range(1, count + 1)):
        raise DecompositionError(f"expected bags 1..{count}")
    td = TreeDecomposition(tuple(bags[i] for i in range(1, count + 1)), tuple(edges))
    if td.width + 1 > header[1]:
        raise DecompositionError("a bag exceeds the declared maximum size")
    return td

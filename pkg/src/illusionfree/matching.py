"""Hopcroft-Karp maximum matching and König vertex covers for bipartite graphs."""
from __future__ import annotations

from collections import deque

INF = float("inf")


def hopcroft_karp(left, adj) -> dict:
    """Maximum matching of a bipartite graph.

    ``left`` lists the left vertices, ``adj`` maps each to its right
    neighbors.  Returns a dict holding both directions of every matched pair.
    """
    left = list(left)
    match_l = {u: None for u in left}
    match_r = {}
    dist = {}

    def bfs():
        queue = deque()
        for u in left:
            if match_l[u] is None:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for w in adj.get(u, ()):
                m = match_r.get(w)
                if m is None:
                    found = min(found, dist[u] + 1)
                elif dist[m] == INF:
                    dist[m] = dist[u] + 1
                    queue.append(m)
        return found != INF

    def dfs(u):
        for w in adj.get(u, ()):
            m = match_r.get(w)
            if m is None or (dist[m] == dist[u] + 1 and dfs(m)):
                match_l[u] = w
                match_r[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if match_l[u] is None:
                dfs(u)
    matching = {}
    for u, w in match_l.items():
        if w is not None:
            matching[u] = w
            matching[w] = u
    return matching


def konig_cover(left, adj, matching) -> set:
    """Minimum vertex cover from a maximum matching.

    With Z the vertices reachable from unmatched left vertices along
    alternating paths, the cover is (left minus Z) plus (right within Z).
    """
    left = list(left)
    reach = set()
    stack = [u for u in left if u not in matching]
    reach.update(stack)
    while stack:
        u = stack.pop()
        for w in adj.get(u, ()):
            if w in reach or matching.get(u) == w:
                continue
            reach.add(w)
            m = matching.get(w)
            if m is not None and m not in reach:
                reach.add(m)
                stack.append(m)
    right = {w for u in left for w in adj.get(u, ())}
    return {u for u in left if u not in reach} | (right & reach)


def bipartition(nodes, edges):
    """Two-color an undirected graph; raises ValueError on an odd cycle."""
    adj = {v: set() for v in nodes}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    side = {}
    for root in sorted(adj):
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in adj[v]:
                if u not in side:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    raise ValueError("graph is not bipartite")
    left = sorted(v for v in adj if side[v] == 0)
    return left, {v: sorted(adj[v]) for v in left}


def minimum_vertex_cover(nodes, edges):
    """Returns (cover, matching size) for a bipartite undirected graph."""
    left, adj = bipartition(nodes, edges)
    matching = hopcroft_karp(left, adj)
    cover = konig_cover(left, adj, matching)
    return cover, len(matching) // 2

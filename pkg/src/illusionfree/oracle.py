"""Exhaustive ground truth for small instances.

Only red vertices are ever flipped, and only red out-neighbors of demanded
illusion vertices can matter.  The search branches on an unsatisfied
vertex, trying each candidate as the smallest flipped one, and keeps
per-vertex counters of flipped out-neighbors up to date incrementally.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .graph import Instance, Recoloring, p_deficiencies, resolve_demand, verify

DEFAULT_MAX_RED = 24


class OracleLimitError(ValueError):
    """Raised when an instance is too large for exhaustive search."""


class _Search:
    def __init__(self, members, needs, n_items):
        self.members = members
        self.needs = needs
        self.of = [[] for _ in range(n_items)]
        for c, mem in enumerate(members):
            for i in mem:
                self.of[i].append(c)
        self.status = [0] * n_items
        self.got = [0] * len(members)
        self.und = [len(m) for m in members]
        self.unsat = sum(1 for c in range(len(members)) if needs[c] > 0)

    def include(self, i):
        self.status[i] = 1
        for c in self.of[i]:
            self.und[c] -= 1
            self.got[c] += 1
            if self.got[c] == self.needs[c]:
                self.unsat -= 1

    def uninclude(self, i):
        self.status[i] = 0
        for c in self.of[i]:
            if self.got[c] == self.needs[c]:
                self.unsat += 1
            self.und[c] += 1
            self.got[c] -= 1

    def exclude(self, i) -> bool:
        self.status[i] = -1
        ok = True
        for c in self.of[i]:
            self.und[c] -= 1
            if self.got[c] + self.und[c] < self.needs[c]:
                ok = False
        return ok

    def unexclude(self, i):
        self.status[i] = 0
        for c in self.of[i]:
            self.und[c] += 1

    def _packing_bound(self) -> int:
        """Sum of missing flips over open constraints with disjoint candidates.

        Constraints are packed in depth-first order over shared candidates,
        which packs every other constraint along chains and cycles.
        """
        status, of = self.status, self.of
        open_ = {c for c, need in enumerate(self.needs) if need > self.got[c]}
        seeds = sorted((self.und[c], c) for c in open_)
        used = set()
        seen = set()
        bound = 0
        for _, seed in seeds:
            if seed in seen:
                continue
            stack = [seed]
            while stack:
                c = stack.pop()
                if c in seen:
                    continue
                seen.add(c)
                cands = [i for i in self.members[c] if status[i] == 0]
                if used.isdisjoint(cands):
                    used.update(cands)
                    bound += self.needs[c] - self.got[c]
                for i in reversed(cands):
                    stack.extend(d for d in of[i] if d in open_ and d not in seen)
        return bound

    def exists(self, budget: int) -> bool:
        if self.unsat == 0:
            return True
        best, best_und = -1, None
        for c, need in enumerate(self.needs):
            missing = need - self.got[c]
            if missing <= 0:
                continue
            if missing > self.und[c] or missing > budget:
                return False
            if best_und is None or self.und[c] < best_und:
                best, best_und = c, self.und[c]
        if self._packing_bound() > budget:
            return False
        missing = self.needs[best] - self.got[best]
        cands = [i for i in self.members[best] if self.status[i] == 0]
        excluded = []
        found = False
        # the first included candidate is cands[j]; cands[:j] stay unflipped
        for j in range(len(cands) - missing + 1):
            i = cands[j]
            self.include(i)
            found = self.exists(budget - 1)
            self.uninclude(i)
            if found:
                break
            excluded.append(i)
            if not self.exclude(i):
                break
        for i in reversed(excluded):
            self.unexclude(i)
        return found


def _model(instance: Instance, demand):
    demand = resolve_demand(instance, demand)
    need = p_deficiencies(instance)
    colors = instance.colors
    rows = []
    for v in sorted(demand):
        if need[v] > 0:
            reds = tuple(u for u in instance.out_nbrs[v] if colors[u] == "R")
            rows.append((reds, need[v]))
    reds = sorted({u for mem, _ in rows for u in mem})
    index = {u: i for i, u in enumerate(reds)}
    members = [tuple(sorted(index[u] for u in mem)) for mem, _ in rows]
    needs = [nd for _, nd in rows]
    return reds, members, needs


def _checked_search(instance, demand, max_red):
    reds, members, needs = _model(instance, demand)
    if max_red is not None and len(reds) > max_red:
        raise OracleLimitError(
            f"{len(reds)} candidate red vertices exceed the oracle limit of {max_red}"
        )
    return reds, _Search(members, needs, len(reds))


def solvable_within(
    instance: Instance, budget: int, demand: Optional[Iterable] = None, max_red: Optional[int] = DEFAULT_MAX_RED
) -> bool:
    """Decide whether at most ``budget`` flips clear every demanded vertex."""
    _, search = _checked_search(instance, demand, max_red)
    return search.exists(budget)


def brute_force_min_recoloring(
    instance: Instance,
    demand: Optional[Iterable] = None,
    size_cap: Optional[int] = None,
    max_red: Optional[int] = DEFAULT_MAX_RED,
) -> Optional[Recoloring]:
    """Minimum recoloring by exhaustive search, or ``None`` above ``size_cap``.

    Among minimum solutions the lexicographically smallest sorted id list
    is returned.
    """
    reds, search = _checked_search(instance, demand, max_red)
    limit = len(reds) if size_cap is None else min(size_cap, len(reds))
    size = next((k for k in range(limit + 1) if search.exists(k)), None)
    if size is None:
        return None
    chosen = []
    for i in range(len(reds)):
        if search.unsat == 0:
            break
        search.include(i)
        if search.exists(size - len(chosen) - 1):
            chosen.append(i)
            continue
        search.uninclude(i)
        search.exclude(i)
    result = Recoloring(reds[i] for i in chosen)
    check = verify(instance, result, demand)
    if not check.valid:
        raise AssertionError(f"oracle produced an invalid recoloring: {check}")
    return result


def brute_force_hitting_set(universe, family, size_cap: Optional[int] = None, max_universe: int = 20):
    """Smallest subset of ``universe`` meeting every set of ``family``.

    Subsets are enumerated by size in lexicographic order, so ties resolve
    to the lexicographically smallest.  Returns ``None`` when no hitting set
    of size at most ``size_cap`` exists.
    """
    universe = sorted(range(universe) if isinstance(universe, int) else universe)
    if len(universe) > max_universe:
        raise OracleLimitError(f"universe of size {len(universe)} exceeds {max_universe}")
    family = [frozenset(a) for a in family]
    limit = len(universe) if size_cap is None else min(size_cap, len(universe))
    for k in range(limit + 1):
        for combo in combinations(universe, k):
            hit = set(combo)
            if all(hit & a for a in family):
                return frozenset(combo)
    return None

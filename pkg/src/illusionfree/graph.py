"""Directed two-colored graphs and the illusion arithmetic.

An edge ``(i, j)`` means that ``i`` can be influenced by ``j``, so ``j`` is an
out-neighbor of ``i``.  Colors are stored as a string over ``{'B', 'R'}``.
All threshold computations use exact rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

BLUE = "B"
RED = "R"

KIND_TAGS = (
    "generic",
    "directed_cycle",
    "underlying_cycle",
    "outward_grid",
    "directed_tree",
    "grid",
    "planar",
)


class InstanceError(ValueError):
    """Raised when an instance violates its structural invariants."""


class StructureMismatch(InstanceError):
    """Raised when a solver is applied to a graph outside its class."""


def _as_fraction(p) -> Fraction:
    if isinstance(p, tuple):
        num, den = p
        if den <= 0:
            raise InstanceError(f"denominator must be positive, got {den}")
        p = Fraction(num, den)
    elif isinstance(p, float):
        # floats are accepted only when they are exact binary fractions
        p = Fraction(p)
    else:
        p = Fraction(p)
    if not 0 <= p <= 1:
        raise InstanceError(f"p must lie in [0, 1], got {p}")
    return p


@dataclass(frozen=True)
class Instance:
    """An immutable directed graph with a red/blue coloring and a threshold p.

    Vertices are the dense ids ``0..n-1``.  ``coords`` holds integer
    ``(row, col)`` positions for grid-like instances, ``layers`` an explicit
    outerplanar layering, and ``demand`` an optional default demand set.
    """

    n: int
    edges: tuple
    colors: str
    p: Fraction = Fraction(1, 2)
    coords: Optional[tuple] = None
    layers: Optional[tuple] = None
    kind: Optional[str] = None
    demand: Optional[frozenset] = None
    out_nbrs: tuple = field(init=False, repr=False, compare=False)
    in_nbrs: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise InstanceError("vertex count must be nonnegative")
        if len(self.colors) != n or set(self.colors) - {BLUE, RED}:
            raise InstanceError("colors must be a B/R string of length n")
        edges = tuple(sorted((int(a), int(b)) for a, b in self.edges))
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for k, (a, b) in enumerate(edges):
            if not (0 <= a < n and 0 <= b < n):
                raise InstanceError(f"edge ({a}, {b}) references an unknown vertex")
            if a == b:
                raise InstanceError(f"self-loop at vertex {a}")
            if k and edges[k - 1] == (a, b):
                raise InstanceError(f"duplicate edge ({a}, {b})")
            out[a].append(b)
            inn[b].append(a)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "p", _as_fraction(self.p))
        object.__setattr__(self, "out_nbrs", tuple(tuple(x) for x in out))
        object.__setattr__(self, "in_nbrs", tuple(tuple(sorted(x)) for x in inn))
        if self.coords is not None:
            coords = tuple((int(r), int(c)) for r, c in self.coords)
            if len(coords) != n:
                raise InstanceError("coords must list one position per vertex")
            if len(set(coords)) != n:
                raise InstanceError("two vertices share a grid position")
            object.__setattr__(self, "coords", coords)
        if self.layers is not None:
            layers = tuple(int(x) for x in self.layers)
            if len(layers) != n or min(layers, default=0) < 0:
                raise InstanceError("layers must give a nonnegative index per vertex")
            object.__setattr__(self, "layers", layers)
        if self.demand is not None:
            demand = frozenset(int(v) for v in self.demand)
            if any(not 0 <= v < n for v in demand):
                raise InstanceError("demand references an unknown vertex")
            object.__setattr__(self, "demand", demand)
        if self.kind is not None:
            if self.kind not in KIND_TAGS:
                raise InstanceError(f"unknown kind tag {self.kind!r}")
            from .validators import check_kind

            check_kind(self, self.kind)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def is_red(self, v: int) -> bool:
        return self.colors[v] == RED

    @property
    def red(self) -> frozenset:
        return frozenset(v for v, c in enumerate(self.colors) if c == RED)

    def replace(self, **changes) -> "Instance":
        fields = dict(
            n=self.n,
            edges=self.edges,
            colors=self.colors,
            p=self.p,
            coords=self.coords,
            layers=self.layers,
            kind=self.kind,
            demand=self.demand,
        )
        fields.update(changes)
        return Instance(**fields)

    def with_p(self, p) -> "Instance":
        return self.replace(p=p)

    def max_out_degree(self) -> int:
        return max((len(x) for x in self.out_nbrs), default=0)

    def undirected_adjacency(self) -> list:
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj


@dataclass(frozen=True)
class Recoloring:
    """A set of vertices flipped from red to blue."""

    flipped: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "flipped", frozenset(int(v) for v in self.flipped))

    @property
    def size(self) -> int:
        return len(self.flipped)

    def sorted(self) -> list:
        return sorted(self.flipped)


class NeighborCounts(NamedTuple):
    out_degree: int
    blue_out: int
    red_out: int


class Verification(NamedTuple):
    valid: bool
    violators: tuple
    reason: Optional[str] = None


def _check_vertex(instance: Instance, v: int) -> None:
    if not 0 <= v < instance.n:
        raise KeyError(f"unknown vertex id {v}")


def ceil_fraction(p: Fraction, d: int) -> int:
    """Exact ``ceil(p * d)`` for a rational ``p``."""
    a, b = p.numerator, p.denominator
    return (a * d + b - 1) // b


def neighbor_counts(instance: Instance, v: int) -> NeighborCounts:
    _check_vertex(instance, v)
    outs = instance.out_nbrs[v]
    red = sum(1 for u in outs if instance.colors[u] == RED)
    return NeighborCounts(len(outs), len(outs) - red, red)


def deficiency(instance: Instance, v: int) -> int:
    """Majority deficiency ``max(0, r_v - b_v)``."""
    d, b, r = neighbor_counts(instance, v)
    return max(0, r - b)


def p_deficiency(instance: Instance, v: int) -> int:
    """Blue out-neighbors still missing for ``v`` to be free of p-illusion."""
    d, b, r = neighbor_counts(instance, v)
    return max(0, ceil_fraction(instance.p, d) - b)


def p_deficiencies(instance: Instance) -> list:
    p = instance.p
    colors = instance.colors
    result = []
    for outs in instance.out_nbrs:
        blue = sum(1 for u in outs if colors[u] == BLUE)
        result.append(max(0, ceil_fraction(p, len(outs)) - blue))
    return result


def resolve_demand(instance: Instance, demand: Optional[Iterable] = None) -> frozenset:
    """Default demand: the instance's own demand block, else every vertex."""
    if demand is None:
        if instance.demand is not None:
            return instance.demand
        return frozenset(range(instance.n))
    demand = frozenset(int(v) for v in demand)
    for v in demand:
        _check_vertex(instance, v)
    return demand


def illusion_set(instance: Instance, demand: Optional[Iterable] = None) -> frozenset:
    demand = resolve_demand(instance, demand)
    return frozenset(v for v in demand if p_deficiency(instance, v) > 0)


def majority_illusion_set(instance: Instance, demand: Optional[Iterable] = None) -> frozenset:
    demand = resolve_demand(instance, demand)
    return frozenset(v for v in demand if deficiency(instance, v) > 0)


def _flip(instance: Instance, flipped: Iterable) -> str:
    colors = list(instance.colors)
    for v in flipped:
        colors[v] = BLUE
    return "".join(colors)


def apply_recoloring(instance: Instance, recoloring) -> Instance:
    """Return a new instance with the flipped vertices colored blue."""
    flipped = _flipped_set(recoloring)
    for v in flipped:
        _check_vertex(instance, v)
        if instance.colors[v] != RED:
            raise InstanceError(f"vertex {v} is blue and cannot be flipped")
    if not flipped:
        return instance
    return instance.replace(colors=_flip(instance, flipped))


def _flipped_set(recoloring) -> frozenset:
    if isinstance(recoloring, Recoloring):
        return recoloring.flipped
    return frozenset(int(v) for v in recoloring)


def verify(instance: Instance, recoloring, demand: Optional[Iterable] = None) -> Verification:
    """Check that flipping ``recoloring`` clears every demanded vertex."""
    flipped = _flipped_set(recoloring)
    demand = resolve_demand(instance, demand)
    unknown = sorted(v for v in flipped if not 0 <= v < instance.n)
    if unknown:
        return Verification(False, (), f"unknown-vertex:{unknown[0]}")
    blue = sorted(v for v in flipped if instance.colors[v] != RED)
    recolored = instance.replace(colors=_flip(instance, [v for v in flipped if v not in blue]))
    violators = tuple(sorted(illusion_set(recolored, demand)))
    if blue:
        return Verification(False, violators, f"blue-vertex-flipped:{blue[0]}")
    if violators:
        return Verification(False, violators, "illusion-remains")
    return Verification(True, ())


def flip_all_reds(instance: Instance) -> Recoloring:
    return Recoloring(instance.red)

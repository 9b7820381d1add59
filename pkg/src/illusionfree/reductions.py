"""Instance generators for the two hardness constructions, with lifting.

Hitting Set becomes a bipartite DAG: one red vertex per element, one blue
vertex per set pointing at its members and at a few blue dummies, so that
each set vertex is exactly one blue out-neighbor short.

Planar monotone rectilinear 3-SAT becomes a full directed grid.  Each
variable owns a cycle of alternating red variable vertices and blue
controllers; its positive and negative reds alternate along the cycle.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

from .graph import (
    Instance,
    InstanceError,
    Recoloring,
    ceil_fraction,
    illusion_set,
    p_deficiencies,
    verify,
)


class ReductionError(InstanceError):
    """Raised when a construction's precondition or self-check fails."""


class UnliftableSolution(ReductionError):
    pass


# ---------------------------------------------------------------- hitting set


@dataclass(frozen=True)
class HittingSetInstance:
    """Universe ``0..n-1``, a family of subsets, and an optional budget."""

    n: int
    family: tuple
    k: Optional[int] = None

    def __post_init__(self):
        family = tuple(frozenset(int(u) for u in a) for a in self.family)
        for j, a in enumerate(family):
            if not a:
                raise ReductionError(f"set {j} is empty")
            if any(not 0 <= u < self.n for u in a):
                raise ReductionError(f"set {j} has an element outside the universe")
        object.__setattr__(self, "family", family)

    @property
    def sizes(self) -> tuple:
        return tuple(len(a) for a in self.family)

    def is_hitting_set(self, chosen) -> bool:
        chosen = set(chosen)
        return all(chosen & a for a in self.family)


@dataclass(frozen=True)
class HittingSetReduction:
    source: HittingSetInstance
    instance: Instance
    budget: Optional[int]
    element_vertex: tuple
    set_vertex: tuple
    dummies: tuple
    x: int
    x_j: tuple
    max_deficiency: int


def dummy_count(p: Fraction, d: int) -> int:
    """``ceil(p*d / (1-p)) - 1`` dummy blues for largest set size ``d``."""
    q = p * d / (1 - p)
    return -((-q.numerator) // q.denominator) - 1


def set_blue_count(p: Fraction, d: int) -> int:
    """Fewest extra blue out-neighbors leaving a size-``d`` set vertex one short.

    The smallest integer ``x`` with ``ceil(p*(d+x)) = x + 1`` is
    ``ceil((p*d - 1) / (1-p))``.
    """
    q = (p * d - 1) / (1 - p)
    x = max(0, -((-q.numerator) // q.denominator))
    if ceil_fraction(p, d + x) - x != 1:
        raise ReductionError(f"no admissible blue count for set size {d} at p={p}")
    return x


def reduce_hitting_set(hs: HittingSetInstance, p) -> HittingSetReduction:
    p = Fraction(p)
    if not 0 < p < 1:
        raise ReductionError("p must lie strictly between 0 and 1")
    if not hs.family:
        raise ReductionError("the family must contain at least one set")
    floor_inv = ceil_fraction(1 / p, 1)
    small = [j for j, d in enumerate(hs.sizes) if d <= floor_inv]
    if small:
        j = small[0]
        raise ReductionError(
            f"set {j} has size {hs.sizes[j]}, but sizes must exceed ceil(1/p) = {floor_inv}"
        )
    n, m = hs.n, len(hs.family)
    x = dummy_count(p, max(hs.sizes))
    x_j = tuple(set_blue_count(p, d) for d in hs.sizes)
    if max(x_j) > x:
        raise ReductionError("a set vertex needs more dummies than were created")
    elements = tuple(range(n))
    sets = tuple(range(n, n + m))
    dummies = tuple(range(n + m, n + m + x))
    edges = []
    for j, a in enumerate(hs.family):
        edges.extend((sets[j], elements[u]) for u in sorted(a))
        edges.extend((sets[j], dummies[t]) for t in range(x_j[j]))
    colors = "R" * n + "B" * (m + x)
    instance = Instance(n + m + x, edges, colors, p, kind="generic")
    need = p_deficiencies(instance)
    bad = [j for j in range(m) if need[sets[j]] != 1]
    if bad:
        raise ReductionError(
            f"set vertex {sets[bad[0]]} has p-deficiency {need[sets[bad[0]]]}, expected 1"
        )
    return HittingSetReduction(
        hs, instance, hs.k, elements, sets, dummies, x, x_j, max(need, default=0)
    )


# ---------------------------------------------------------------- 3-SAT


@dataclass(frozen=True)
class Clause:
    positive: bool
    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))


@dataclass(frozen=True)
class RectilinearFormula:
    """Variables in axis order and monotone clauses with three distinct variables.

    Positive clauses are drawn above the axis and negative ones below.
    Clauses on one side must be disjoint or nested between two legs of
    the enclosing clause.
    """

    variables: tuple
    clauses: tuple = ()
    levels: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        variables = tuple(self.variables)
        if len(set(variables)) != len(variables):
            raise ReductionError("variable names must be distinct")
        position = {v: i for i, v in enumerate(variables)}
        clauses = []
        for i, c in enumerate(self.clauses):
            if not isinstance(c, Clause):
                c = Clause(*c)
            if len(c.variables) != 3 or len(set(c.variables)) != 3:
                raise ReductionError(f"clause {i} must have three distinct variables")
            unknown = [v for v in c.variables if v not in position]
            if unknown:
                raise ReductionError(f"clause {i} uses unknown variable {unknown[0]!r}")
            clauses.append(Clause(c.positive, tuple(sorted(c.variables, key=position.get))))
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "clauses", tuple(clauses))
        object.__setattr__(self, "levels", self._nesting_levels())

    def span(self, i: int) -> tuple:
        position = {v: k for k, v in enumerate(self.variables)}
        return tuple(position[v] for v in self.clauses[i].variables)

    def _nesting_levels(self) -> tuple:
        spans = [self.span(i) for i in range(len(self.clauses))]

        def inside(a, b):
            lo, mid, hi = spans[b]
            return (lo <= spans[a][0] and spans[a][2] <= mid) or (
                mid <= spans[a][0] and spans[a][2] <= hi
            )

        count = len(self.clauses)
        for a in range(count):
            for b in range(a + 1, count):
                if self.clauses[a].positive != self.clauses[b].positive:
                    continue
                disjoint = spans[a][2] <= spans[b][0] or spans[b][2] <= spans[a][0]
                if not (disjoint or inside(a, b) or inside(b, a)):
                    raise ReductionError(f"clauses {a} and {b} cross in the embedding")
        levels = [0] * count
        for a in sorted(range(count), key=lambda i: spans[i][2] - spans[i][0]):
            inner = [
                levels[b]
                for b in range(count)
                if b != a and self.clauses[b].positive == self.clauses[a].positive
                and inside(b, a)
            ]
            levels[a] = 1 + max(inner, default=0)
        return tuple(levels)

    def evaluate(self, assignment: dict) -> bool:
        return all(
            any(assignment[v] == c.positive for v in c.variables) for c in self.clauses
        )

    def satisfying_assignment(self) -> Optional[dict]:
        """First satisfying assignment in lexicographic order (False first)."""
        for values in product((False, True), repeat=len(self.variables)):
            assignment = dict(zip(self.variables, values))
            if self.evaluate(assignment):
                return assignment
        return None

    def is_satisfiable(self) -> bool:
        return self.satisfying_assignment() is not None


@dataclass(frozen=True)
class GridReduction:
    formula: RectilinearFormula
    instance: Instance
    budget: int
    ell: dict
    positive: dict  # variable -> red ids of positive variable vertices
    negative: dict
    controllers: dict
    clause_vertices: tuple
    pendants: tuple
    dummies: tuple
    max_deficiency: int


def _clause_row(clause: Clause, level: int) -> int:
    return 1 - 3 * level if clause.positive else 3 * level - 1


def _coarse_trees(formula: RectilinearFormula):
    """Coarse tree (nodes, edges) per variable and clause block positions.

    The clause block sits at ``(R, C)``; the blocks above, right of and
    below it belong to the three literal gadgets.  Above the axis the left
    literal takes the top, the middle literal the bottom; below the axis
    the middle literal takes the top and the left literal the bottom.
    """
    legs = {v: {True: [], False: []} for v in formula.variables}
    for i, c in enumerate(formula.clauses):
        level = formula.levels[i]
        left, mid, right = c.variables
        legs[left][c.positive].append(((2, -level), i, "left"))
        legs[mid][c.positive].append(((1, 0), i, "mid"))
        legs[right][c.positive].append(((0, level), i, "right"))
    column = {}
    base = {}
    col = 0
    for v in formula.variables:
        base[v] = col
        width = 1
        for side in (True, False):
            ordered = sorted(legs[v][side])
            for k, (_, i, role) in enumerate(ordered):
                column[(i, role)] = col + 2 * k
            width = max(width, len(ordered))
        # empty columns between legs leave room for polarity detours
        col += 2 * width
    blocks = {}
    for i, c in enumerate(formula.clauses):
        blocks[i] = (_clause_row(c, formula.levels[i]), column[(i, "mid")])
    trees = {}
    owner = {}
    for v in formula.variables:
        nodes, edges = [], []

        def path(points):
            for k, pt in enumerate(points):
                if pt in owner and owner[pt] != v:
                    raise ReductionError(
                        f"routing failure: gadgets of {owner[pt]!r} and {v!r} meet at {pt}"
                    )
                if pt not in owner:
                    owner[pt] = v
                    nodes.append(pt)
                if k:
                    edges.append((points[k - 1], pt))

        cols = [column[(i, role)] for side in (True, False) for _, i, role in legs[v][side]]
        lo, hi = min(cols, default=base[v]), max(cols, default=base[v])
        path([(0, c) for c in range(lo, hi + 1)])
        for side in (True, False):
            step = -1 if side else 1
            for _, i, role in legs[v][side]:
                c0 = column[(i, role)]
                row, mid = blocks[i]
                if role == "mid":
                    tip = row - step
                    pts = [(r, c0) for r in range(0, tip + step, step)]
                elif role == "left":
                    # the arm runs just outside the clause block, away from the axis
                    turn = row + step
                    pts = [(r, c0) for r in range(0, turn + step, step)]
                    pts += [(turn, c) for c in range(c0 + 1, mid + 1)]
                else:
                    pts = [(r, c0) for r in range(0, row + step, step)]
                    pts += [(row, c) for c in range(c0 - 1, mid, -1)]
                path(pts)
        trees[v] = (nodes, edges)
    for i, pt in blocks.items():
        if pt in owner:
            raise ReductionError(f"routing failure: clause {i} block is covered by a gadget")
    return trees, blocks


def _block(node):
    r, c = node
    return (2 * r, 2 * c), (2 * r, 2 * c + 1), (2 * r + 1, 2 * c), (2 * r + 1, 2 * c + 1)


def _tour(nodes, edges) -> list:
    """Closed walk through all four cells of every tree node, around the tree."""
    tree = set()
    for a, b in edges:
        tree.add((a, b))
        tree.add((b, a))
    adj = {}

    def link(u, w):
        adj.setdefault(u, []).append(w)
        adj.setdefault(w, []).append(u)

    for node in nodes:
        r, c = node
        tl, tr, bl, br = _block(node)
        if ((r - 1, c), node) not in tree:
            link(tl, tr)
        if ((r + 1, c), node) not in tree:
            link(bl, br)
        else:
            below = _block((r + 1, c))
            link(bl, below[0])
            link(br, below[1])
        if ((r, c - 1), node) not in tree:
            link(tl, bl)
        if ((r, c + 1), node) not in tree:
            link(tr, br)
        else:
            right = _block((r, c + 1))
            link(tr, right[0])
            link(br, right[2])
    start = min(adj)
    walk = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        step = min(nxt) if prev is None else nxt[0]
        if step == start:
            break
        walk.append(step)
        prev, cur = cur, step
    if len(walk) != 4 * len(nodes) or any(len(x) != 2 for x in adj.values()):
        raise ReductionError("gadget tour is not a simple cycle")
    return walk


_DIRS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def _place_bump(walk, start, stop, taken):
    """Insert two cells beside some link ``walk[t], walk[t+1]`` with start <= t < stop."""
    size = len(walk)
    for t in range(start, stop):
        u, w = walk[t % size], walk[(t + 1) % size]
        for dr, dc in _DIRS:
            if (dr, dc) in ((w[0] - u[0], w[1] - u[1]), (u[0] - w[0], u[1] - w[1])):
                continue
            a, b = (u[0] + dr, u[1] + dc), (w[0] + dr, w[1] + dc)
            if a in taken or b in taken:
                continue
            taken.update((a, b))
            at = t % size + 1
            walk[at:at] = [a, b]
            return
    raise ReductionError("routing failure: no room to adjust gadget polarity")


def _fix_polarity(walk, wants, taken):
    """Add detours until consecutive attachments have the requested polarity.

    ``wants`` maps attachment cells to True (positive) or False.  Reds two
    steps apart on the cycle alternate polarity, so the gap between two
    attachments must be ``0 mod 4`` exactly when their polarities agree.
    """
    while wants:
        where = sorted((walk.index(cell), want) for cell, want in wants.items())
        size = len(walk)
        for k, (pos, want) in enumerate(where):
            nxt, nwant = where[(k + 1) % len(where)]
            gap = (nxt - pos) % size or size
            if (gap // 2) % 2 != (want != nwant):
                _place_bump(walk, pos, pos + gap, taken)
                break
        else:
            return where[0]
    return None


def reduce_rectilinear_3sat(formula: RectilinearFormula) -> GridReduction:
    """Directed grid instance solvable within ``k' = sum(ell)`` iff ``formula`` is satisfiable."""
    trees, blocks = _coarse_trees(formula)
    taken = set()
    for i, node in blocks.items():
        taken.update(_block(node))
    walks = {}
    for v, (nodes, edges) in trees.items():
        walks[v] = _tour(nodes, edges)
        taken.update(walks[v])
    wants = {v: {} for v in formula.variables}
    clause_cells = {}
    for i, c in enumerate(formula.clauses):
        tl, tr, bl, br = _block(blocks[i])
        left, mid, _ = c.variables
        bottom = mid if c.positive else left
        walk = walks[bottom]
        below = _block((blocks[i][0] + 1, blocks[i][1]))
        at = next(
            t for t in range(len(walk))
            if {walk[t], walk[(t + 1) % len(walk)]} == {below[0], below[1]}
        )
        seq = [bl, br] if walk[at] == below[0] else [br, bl]
        walk[at + 1:at + 1] = seq
        attach = {
            (tr[0] - 1, tr[1]): (left if c.positive else mid),
            (tr[0], tr[1] + 1): c.variables[2],
            br: bottom,
        }
        for cell, v in attach.items():
            if cell not in walks[v]:
                raise ReductionError(f"routing failure at clause {i}")
            wants[v][cell] = c.positive
        clause_cells[i] = (tr, tl, tuple(attach))
    reference = {}
    for v in formula.variables:
        ref = _fix_polarity(walks[v], wants[v], taken)
        if ref is None:
            walk = walks[v]
            first = next(t for t, (r, c) in enumerate(walk) if (r + c) % 2 == 0)
            ref = (first, True)
        reference[v] = ref

    cells = set(taken)
    rows = [r for r, _ in cells] or [0, 1]
    cols = [c for _, c in cells] or [0, 1]
    r0, c0 = min(rows), min(cols)
    height, width = max(rows) - r0 + 1, max(cols) - c0 + 1

    def vid(cell):
        return (cell[0] - r0) * width + (cell[1] - c0)

    n = height * width
    role = ["dummy"] * n
    colors = ["B"] * n
    positive = {v: [] for v in formula.variables}
    negative = {v: [] for v in formula.variables}
    controllers = {v: [] for v in formula.variables}
    arcs = set()
    for v, walk in walks.items():
        size = len(walk)
        if size % 4:
            raise ReductionError(f"gadget of {v!r} has length {size}, not a multiple of 4")
        pos, want = reference[v]
        for t, cell in enumerate(walk):
            u = vid(cell)
            if (cell[0] + cell[1]) % 2 == 0:
                role[u] = "red"
                colors[u] = "R"
                (positive if ((t - pos) % 4 == 0) == want else negative)[v].append(u)
            else:
                role[u] = "controller"
                controllers[v].append(u)
                for w in (walk[t - 1], walk[(t + 1) % size]):
                    arcs.add((u, vid(w)))
    clause_vertices, pendants = [], []
    for i in range(len(formula.clauses)):
        q, pendant, attached = clause_cells[i]
        role[vid(q)] = "clause"
        role[vid(pendant)] = "pendant"
        clause_vertices.append(vid(q))
        pendants.append(vid(pendant))
        arcs.add((vid(q), vid(pendant)))
        arcs.update((vid(q), vid(cell)) for cell in attached)

    edges = []
    for r in range(height):
        for c in range(width):
            u = r * width + c
            for w in ((u + 1) if c + 1 < width else None, (u + width) if r + 1 < height else None):
                if w is None:
                    continue
                if (u, w) in arcs or (w, u) in arcs:
                    edges.append((u, w) if (u, w) in arcs else (w, u))
                    continue
                kinds = {role[u], role[w]}
                if kinds == {"red"} or "clause" in kinds:
                    raise ReductionError(f"vertices {u} and {w} should not be adjacent")
                if "red" in kinds:
                    edges.append((u, w) if role[u] == "red" else (w, u))
                elif "controller" in kinds:
                    edges.append((w, u) if role[u] == "controller" else (u, w))
                else:
                    edges.append((u, w))
    coords = [(r, c) for r in range(height) for c in range(width)]
    instance = Instance(n, edges, "".join(colors), Fraction(1, 2), coords=coords, kind="grid")

    expected = frozenset(clause_vertices) | {u for v in controllers for u in controllers[v]}
    if illusion_set(instance) != expected:
        raise ReductionError("self-check failed: illusion set differs from controllers and clauses")
    ell = {v: len(positive[v]) for v in formula.variables}
    if any(len(negative[v]) != ell[v] for v in formula.variables):
        raise ReductionError("self-check failed: unbalanced gadget polarity")
    dummies = tuple(u for u in range(n) if role[u] == "dummy")
    return GridReduction(
        formula,
        instance,
        sum(ell.values()),
        ell,
        {v: tuple(sorted(x)) for v, x in positive.items()},
        {v: tuple(sorted(x)) for v, x in negative.items()},
        {v: tuple(sorted(x)) for v, x in controllers.items()},
        tuple(clause_vertices),
        tuple(pendants),
        dummies,
        max(p_deficiencies(instance), default=0),
    )


# ---------------------------------------------------------------- lifting


def lift_solutions(record, solution):
    """Map a solution across a reduction.

    A Recoloring maps back to the source problem (element set or truth
    assignment); anything else is treated as a source solution and maps
    forward to a Recoloring.
    """
    if isinstance(record, HittingSetReduction):
        if isinstance(solution, Recoloring):
            return _hitting_set_from_flips(record, solution)
        chosen = frozenset(int(u) for u in solution)
        if not record.source.is_hitting_set(chosen):
            raise UnliftableSolution("element set misses a set of the family")
        return Recoloring(record.element_vertex[u] for u in chosen)
    if isinstance(record, GridReduction):
        if isinstance(solution, Recoloring):
            return _assignment_from_flips(record, solution)
        missing = [v for v in record.formula.variables if v not in solution]
        if missing:
            raise UnliftableSolution(f"assignment gives no value to {missing[0]!r}")
        flips = []
        for v in record.formula.variables:
            flips.extend(record.positive[v] if solution[v] else record.negative[v])
        return Recoloring(flips)
    raise TypeError(f"unsupported reduction record {type(record).__name__}")


def _hitting_set_from_flips(record, recoloring):
    check = verify(record.instance, recoloring)
    if not check.valid:
        raise UnliftableSolution(f"recoloring is not illusion-free ({check.reason})")
    index = {r: u for u, r in enumerate(record.element_vertex)}
    return frozenset(index[r] for r in recoloring.flipped)


def _assignment_from_flips(record, recoloring):
    check = verify(record.instance, recoloring)
    if not check.valid:
        raise UnliftableSolution(f"recoloring is not illusion-free ({check.reason})")
    if recoloring.size > record.budget:
        raise UnliftableSolution(
            f"recoloring uses {recoloring.size} flips, more than the budget {record.budget}"
        )
    assignment = {}
    for v in record.formula.variables:
        mine = recoloring.flipped & (set(record.positive[v]) | set(record.negative[v]))
        if mine == set(record.positive[v]):
            assignment[v] = True
        elif mine == set(record.negative[v]):
            assignment[v] = False
        else:
            raise UnliftableSolution(f"gadget of {v!r} is recolored in a mixed pattern")
    return assignment

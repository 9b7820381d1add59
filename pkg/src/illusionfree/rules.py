"""Safe reduction rules and the bounded out-degree shortcuts."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .graph import (
    Instance,
    Recoloring,
    StructureMismatch,
    illusion_set,
    resolve_demand,
)

HALF = Fraction(1, 2)


class RuleResult(NamedTuple):
    forced: frozenset
    demand: frozenset


def rule_single_red_outneighbor(
    instance: Instance, demand: Optional[Iterable] = None, vertices: Optional[Iterable] = None
) -> RuleResult:
    """Flip red out-neighbors that are the only way to clear a vertex.

    A demanded vertex whose p-deficiency equals its number of red
    out-neighbors has no choice: all of them must be flipped.  The common
    case is a single red out-neighbor with deficiency one.  ``vertices``
    optionally restricts which demanded vertices may trigger the rule
    (the tree solver uses the leaves only).  Iterates to a fixpoint.
    """
    demand = resolve_demand(instance, demand)
    triggers = demand if vertices is None else demand & frozenset(vertices)
    colors = list(instance.colors)
    forced = set()
    changed = True
    while changed:
        changed = False
        for v in sorted(triggers):
            outs = instance.out_nbrs[v]
            reds = [u for u in outs if colors[u] == "R"]
            if not reds:
                continue
            blue = len(outs) - len(reds)
            need = -(-instance.p.numerator * len(outs) // instance.p.denominator) - blue
            if need > 0 and need == len(reds):
                for u in reds:
                    colors[u] = "B"
                    forced.add(u)
                changed = True
    reduced = instance.replace(colors="".join(colors))
    return RuleResult(frozenset(forced), illusion_set(reduced, demand))


def high_p_bounded_outdegree_solve(
    instance: Instance, demand: Optional[Iterable] = None
) -> Recoloring:
    """Optimal flip set when every out-degree is at most two and p > 1/2.

    At such p a vertex with one or two out-neighbors needs all of them blue,
    so every red out-neighbor of a demanded illusion vertex must be flipped.
    """
    if instance.p <= HALF or instance.max_out_degree() > 2:
        raise StructureMismatch("requires max out-degree <= 2 and p > 1/2")
    bad = illusion_set(instance, demand)
    return Recoloring(
        u for v in bad for u in instance.out_nbrs[v] if instance.colors[u] == "R"
    )


def is_half_equivalent(instance: Instance) -> bool:
    """True when p-illusion coincides with majority illusion vertex by vertex.

    Needs out-degree at most two and ``0 < p <= 1/2``; at ``p = 0`` nothing
    is ever under p-illusion, so the equivalence fails there.
    """
    return instance.max_out_degree() <= 2 and 0 < instance.p <= HALF


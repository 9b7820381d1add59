from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from illusionfree.generate import generate_random
from illusionfree.graph import (
    Instance,
    Recoloring,
    apply_recoloring,
    illusion_set,
    majority_illusion_set,
    verify,
)
from illusionfree.oracle import brute_force_min_recoloring
from illusionfree.rules import (
    high_p_bounded_outdegree_solve,
    is_half_equivalent,
    rule_single_red_outneighbor,
)

import pytest

from conftest import instances


def out_star(k, p=Fraction(1, 2)):
    return Instance(k + 1, [(0, i) for i in range(1, k + 1)], "B" + "R" * k, p)


def test_rule_cascade_on_cascade(cascade):
    result = rule_single_red_outneighbor(cascade)
    assert result.forced == {5, 6, 7, 8}
    assert result.demand == frozenset()


def test_rule_first_pass_on_cascade(cascade):
    # v1 and v2 alone already force v6 and v7
    result = rule_single_red_outneighbor(cascade, vertices=[0, 1])
    assert {5, 6} <= result.forced


def test_rule_inapplicable_cases():
    assert rule_single_red_outneighbor(Instance(3, [(0, 1), (1, 2)], "BBB")).forced == frozenset()
    assert rule_single_red_outneighbor(out_star(3)).forced == frozenset()


@given(instances(max_n=8))
def test_rule_is_safe(instance):
    forced, reduced_demand = rule_single_red_outneighbor(instance)
    whole = brute_force_min_recoloring(instance)
    rest = brute_force_min_recoloring(apply_recoloring(instance, forced), reduced_demand)
    assert whole.size == len(forced) + rest.size


def test_high_p_examples():
    e6 = Instance(4, [(0, 1), (1, 2), (2, 3), (3, 0)], "BRBR", Fraction(2, 3))
    assert high_p_bounded_outdegree_solve(e6).flipped == {1, 3}
    lonely = Instance(2, [], "RB", Fraction(2, 3))
    assert high_p_bounded_outdegree_solve(lonely).flipped == frozenset()
    path = Instance(2, [(0, 1)], "BR", Fraction(3, 4))
    assert high_p_bounded_outdegree_solve(path).flipped == {1}


def test_high_p_precondition():
    with pytest.raises(ValueError):
        high_p_bounded_outdegree_solve(out_star(3, Fraction(2, 3)))
    with pytest.raises(ValueError):
        high_p_bounded_outdegree_solve(out_star(2, Fraction(1, 2)))


@given(st.integers(0, 10**6), st.sampled_from([Fraction(2, 3), Fraction(3, 4), Fraction(1)]))
def test_high_p_matches_oracle(seed, p):
    kind = ["directed_cycle", "underlying_cycle", "outward_grid"][seed % 3]
    n = 3 if kind == "outward_grid" else 9
    instance = generate_random(kind, n, 0.5, p, seed)
    result = high_p_bounded_outdegree_solve(instance)
    assert verify(instance, result).valid
    assert result.size == brute_force_min_recoloring(instance).size


def test_half_equivalence_examples(cascade):
    grid = generate_random("outward_grid", 2, 0.5, Fraction(1, 3), 0)
    assert is_half_equivalent(grid)
    assert is_half_equivalent(cascade)
    assert not is_half_equivalent(out_star(3))
    assert not is_half_equivalent(cascade.with_p(0))


@given(st.integers(0, 10**6), st.sampled_from([Fraction(1, 5), Fraction(1, 3), Fraction(1, 2)]))
def test_half_equivalence_property(seed, p):
    instance = generate_random("underlying_cycle", 8, 0.5, p, seed)
    assert is_half_equivalent(instance)
    assert illusion_set(instance) == majority_illusion_set(instance)
    flips = Recoloring(v for v in instance.red if (seed >> v) & 1)
    assert verify(instance, flips).valid == verify(instance.with_p(Fraction(1, 2)), flips).valid

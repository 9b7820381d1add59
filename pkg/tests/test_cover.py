from fractions import Fraction

from hypothesis import given

from illusionfree.cover import (
    CoverModel,
    build_cover_model,
    dual_graph,
    export_lp,
    primal_graph,
    solve_by_cover,
    solve_cover_exact,
    treedepth_upper_bound,
)
from illusionfree.graph import Instance, verify
from illusionfree.oracle import brute_force_min_recoloring

from conftest import instances


def out_star():
    return Instance(4, [(0, 1), (0, 2), (0, 3)], "BRRR")


def test_model_examples(square):
    model = build_cover_model(square)
    assert model.elements == (2, 3)
    assert model.pairs() == [({2, 3}, 1), ({2, 3}, 1)]
    assert len(build_cover_model(Instance(2, [(0, 1)], "BB"))) == 0
    assert build_cover_model(out_star()).pairs() == [({1, 2, 3}, 2)]


def test_solve_examples(square):
    assert solve_cover_exact(build_cover_model(square)) == {2}
    assert solve_cover_exact(build_cover_model(out_star())) == {1, 2}
    assert solve_cover_exact(CoverModel((), ())) == frozenset()


def test_constraint_graphs(square):
    model = build_cover_model(square)
    assert set(primal_graph(model).edges) == {(2, 3)}
    assert set(dual_graph(model).edges) == {(0, 1)}
    disjoint = CoverModel((1, 2), ((frozenset({1}), 1, 0), (frozenset({2}), 1, 3)))
    assert dual_graph(disjoint).number_of_edges() == 0
    clique = CoverModel((1, 2, 3, 4), ((frozenset({1, 2, 3, 4}), 1, 0),))
    assert primal_graph(clique).number_of_edges() == 6
    assert treedepth_upper_bound(primal_graph(clique)) == 4


def test_lp_export(square):
    text = export_lp(build_cover_model(square))
    assert " v0: x2 + x3 >= 1" in text
    assert text.endswith("End\n")


def test_invalid_model_rejected():
    import pytest

    with pytest.raises(ValueError):
        CoverModel((1,), ((frozenset({1}), 2, 0),))


@given(instances(max_n=10))
def test_cover_matches_oracle(instance):
    result = solve_by_cover(instance)
    assert verify(instance, result).valid
    assert result.flipped == brute_force_min_recoloring(instance).flipped


@given(instances(max_n=9))
def test_fewer_demands_never_cost_more(instance):
    demand = set(range(0, instance.n, 2))
    assert solve_by_cover(instance, demand).size <= solve_by_cover(instance).size


def test_rational_threshold():
    star = Instance(5, [(0, i) for i in range(1, 5)], "BRRRR", Fraction(3, 4))
    assert solve_by_cover(star).size == 3

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from illusionfree.formats import parse_formula
from illusionfree.graph import Recoloring, illusion_set, p_deficiency, verify
from illusionfree.oracle import brute_force_hitting_set, brute_force_min_recoloring
from illusionfree.reductions import (
    Clause,
    HittingSetInstance,
    ReductionError,
    RectilinearFormula,
    UnliftableSolution,
    dummy_count,
    lift_solutions,
    reduce_hitting_set,
    reduce_rectilinear_3sat,
    set_blue_count,
)

FORMULAS = sorted((Path(__file__).parent / "data" / "formulas").glob("*.fml"))
HALF = Fraction(1, 2)


def test_single_set_example():
    record = reduce_hitting_set(HittingSetInstance(3, [{0, 1, 2}]), HALF)
    assert record.x == 2
    assert record.x_j == (1,)
    v1 = record.set_vertex[0]
    assert len(record.instance.out_nbrs[v1]) == 4
    assert p_deficiency(record.instance, v1) == 1
    assert lift_solutions(record, {0}).flipped == {record.element_vertex[0]}
    assert verify(record.instance, lift_solutions(record, {0})).valid


def test_third_threshold():
    assert set_blue_count(Fraction(1, 3), 4) == 1
    assert dummy_count(Fraction(1, 3), 4) == 1
    record = reduce_hitting_set(HittingSetInstance(4, [{0, 1, 2, 3}]), Fraction(1, 3))
    assert p_deficiency(record.instance, record.set_vertex[0]) == 1


def test_small_sets_rejected():
    shape = HittingSetInstance(4, [{0, 1}, {0, 2, 3}])
    with pytest.raises(ReductionError, match="size 2"):
        reduce_hitting_set(shape, HALF)
    for p in (0, 1):
        with pytest.raises(ReductionError):
            reduce_hitting_set(HittingSetInstance(4, [{0, 1, 2}]), p)
    with pytest.raises(ReductionError):
        HittingSetInstance(2, [set()])


def test_hitting_set_lift_rejects_bad_input():
    record = reduce_hitting_set(HittingSetInstance(6, [{0, 1, 2}, {3, 4, 5}]), HALF)
    with pytest.raises(UnliftableSolution):
        lift_solutions(record, {0})
    with pytest.raises(UnliftableSolution):
        lift_solutions(record, Recoloring([0]))
    assert lift_solutions(record, Recoloring([0, 3])) == {0, 3}


@st.composite
def hitting_sets(draw, p=HALF):
    n = draw(st.integers(3, 7))
    low = -(-1 // p) + 1
    size = st.integers(min(low, n), n)
    family = [
        draw(st.sets(st.integers(0, n - 1), min_size=s, max_size=s))
        for s in draw(st.lists(size, min_size=1, max_size=4))
    ]
    return HittingSetInstance(n, family)


@settings(max_examples=60)
@given(st.data(), st.sampled_from([Fraction(1, 3), HALF, Fraction(2, 3)]))
def test_hitting_set_round_trip(data, p):
    hs = data.draw(hitting_sets(p))
    if min(hs.sizes) <= -(-1 // p):
        with pytest.raises(ReductionError):
            reduce_hitting_set(hs, p)
        return
    record = reduce_hitting_set(hs, p)
    for v in record.set_vertex:
        assert p_deficiency(record.instance, v) == 1
    best = brute_force_min_recoloring(record.instance)
    assert best.size == len(brute_force_hitting_set(hs.n, hs.family))
    assert hs.is_hitting_set(lift_solutions(record, best))


def test_formula_validation():
    with pytest.raises(ReductionError):
        RectilinearFormula(("x", "x"), ())
    with pytest.raises(ReductionError):
        RectilinearFormula(("x", "y"), (Clause(True, ("x", "y", "y")),))
    with pytest.raises(ReductionError, match="cross"):
        RectilinearFormula(("a", "b", "c", "d"),
                           (Clause(True, ("a", "b", "c")), Clause(True, ("b", "c", "d"))))


def test_empty_formula():
    record = reduce_rectilinear_3sat(RectilinearFormula((), ()))
    assert record.budget == 0
    assert not illusion_set(record.instance)


@pytest.fixture(scope="module")
def single_clause():
    return reduce_rectilinear_3sat(parse_formula("vars x y z\n+ x y z\n"))


def test_single_clause_shape(single_clause):
    record = single_clause
    assert record.budget == sum(record.ell.values()) == 13
    for v in "xyz":
        assert len(record.positive[v]) == len(record.negative[v]) == record.ell[v]
    assert record.instance.p == HALF
    assert record.instance.kind == "grid"


@pytest.mark.parametrize("path", FORMULAS, ids=lambda p: p.stem)
def test_grid_invariants(path):
    record = reduce_rectilinear_3sat(parse_formula(path.read_text()))
    inst = record.instance
    cell = {c: v for v, c in enumerate(inst.coords)}
    for v in inst.red:
        r, c = inst.coords[v]
        for nb in ((r + 1, c), (r, c + 1)):
            assert nb not in cell or not inst.is_red(cell[nb])
    expected = set(record.clause_vertices)
    for ids in record.controllers.values():
        expected |= set(ids)
    assert illusion_set(inst) == expected
    assert not illusion_set(inst) & set(record.dummies)


def test_lifting_assignments(single_clause):
    record = single_clause
    truth = {"x": True, "y": False, "z": False}
    flips = lift_solutions(record, truth)
    assert flips.flipped == set(record.positive["x"]) | set(record.negative["y"]) | set(
        record.negative["z"])
    assert verify(record.instance, flips).valid
    assert lift_solutions(record, flips) == truth
    falsy = lift_solutions(record, dict.fromkeys("xyz", False))
    assert not verify(record.instance, falsy).valid
    with pytest.raises(UnliftableSolution):
        lift_solutions(record, falsy)
    with pytest.raises(UnliftableSolution):
        lift_solutions(record, {"x": True})


def test_all_reds_unliftable(single_clause):
    everything = Recoloring(single_clause.instance.red)
    assert verify(single_clause.instance, everything).valid
    with pytest.raises(UnliftableSolution):
        lift_solutions(single_clause, everything)


def test_mixed_pattern_unliftable(single_clause):
    record = single_clause
    base = lift_solutions(record, dict.fromkeys("xyz", True))
    swapped = set(base.flipped)
    swapped.discard(record.positive["x"][0])
    swapped.add(record.negative["x"][0])
    with pytest.raises(UnliftableSolution):
        lift_solutions(record, Recoloring(swapped))

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from illusionfree.graph import (
    Instance,
    InstanceError,
    Recoloring,
    apply_recoloring,
    deficiency,
    flip_all_reds,
    illusion_set,
    majority_illusion_set,
    neighbor_counts,
    p_deficiencies,
    p_deficiency,
    verify,
)

from conftest import instances


def star(d, b, p):
    """Vertex 0 pointing at b blue and d - b red leaves."""
    colors = "B" + "B" * b + "R" * (d - b)
    return Instance(d + 1, [(0, i) for i in range(1, d + 1)], colors, p)


def test_neighbor_counts_on_examples(cascade, square):
    assert neighbor_counts(cascade, 2) == (2, 0, 2)
    assert neighbor_counts(square, 0) == (2, 0, 2)
    sink = Instance(2, [(0, 1)], "BR")
    assert neighbor_counts(sink, 1) == (0, 0, 0)


def test_unknown_vertex_rejected(square):
    with pytest.raises(KeyError):
        neighbor_counts(square, 9)


def test_deficiency_examples(cascade, square):
    assert deficiency(cascade, 2) == 2
    assert deficiency(square, 1) == 2
    assert deficiency(star(3, 3, Fraction(1, 2)), 0) == 0


def test_p_deficiency_examples():
    assert p_deficiency(star(4, 1, Fraction(1, 2)), 0) == 1
    assert p_deficiency(star(3, 1, Fraction(2, 3)), 0) == 1
    for p in (Fraction(0), Fraction(1, 3), Fraction(1)):
        assert p_deficiency(star(0, 0, p), 0) == 0


def test_exact_threshold_ties():
    # 0.1 * 10 is exactly 1 with rationals; a float ceiling would give 2
    assert p_deficiency(star(10, 0, Fraction(1, 10)), 0) == 1


def test_illusion_sets(cascade, square):
    assert illusion_set(cascade) == frozenset(range(9))
    assert illusion_set(square.with_p(Fraction(1, 3))) == {0, 1}
    assert illusion_set(Instance(3, [(0, 1), (1, 2)], "BBB")) == frozenset()


def test_verify_examples(cascade, square):
    assert verify(cascade, Recoloring({5, 6, 7, 8})).valid
    empty = verify(cascade, Recoloring())
    assert not empty.valid and len(empty.violators) == 9
    assert verify(square, Recoloring({2})).valid


def test_verify_rejects_blue_flip(square):
    result = verify(square, Recoloring({0, 2}))
    assert not result.valid and result.reason == "blue-vertex-flipped:0"


def test_apply_recoloring(cascade, square):
    assert apply_recoloring(square, Recoloring()) == square
    assert apply_recoloring(square, Recoloring({2, 3})).colors == "BBBB"
    after = apply_recoloring(cascade, Recoloring({5}))
    assert not {0, 4, 8} & illusion_set(after)
    assert cascade.colors == "BBBBBRRRR"
    with pytest.raises(InstanceError):
        apply_recoloring(square, Recoloring({1}))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=2, edges=[(0, 0)], colors="BR"),
        dict(n=2, edges=[(0, 1), (0, 1)], colors="BR"),
        dict(n=2, edges=[], colors="BX"),
        dict(n=2, edges=[], colors="BR", p=(3, 2)),
        dict(n=2, edges=[(0, 2)], colors="BR"),
    ],
)
def test_invalid_instances(kwargs):
    with pytest.raises(InstanceError):
        Instance(**kwargs)


def test_kind_tag_is_validated():
    with pytest.raises(InstanceError):
        Instance(3, [(0, 1)], "BBB", kind="directed_cycle")


@given(instances(p=st.just(Fraction(1, 2))))
def test_half_threshold_matches_majority(instance):
    for v in instance.vertices:
        d = deficiency(instance, v)
        assert (d > 0) == (p_deficiency(instance, v) > 0)
        assert -(-d // 2) == p_deficiency(instance, v)
    assert illusion_set(instance) == majority_illusion_set(instance)


@given(instances())
def test_deficiency_never_exceeds_red_out(instance):
    for v in instance.vertices:
        assert p_deficiency(instance, v) <= neighbor_counts(instance, v).red_out


@given(instances(), st.data())
def test_flipping_is_monotone(instance, data):
    reds = sorted(instance.red)
    if not reds:
        return
    v = data.draw(st.sampled_from(reds))
    before = p_deficiencies(instance)
    after = p_deficiencies(apply_recoloring(instance, Recoloring({v})))
    assert all(a <= b for a, b in zip(after, before))


@given(instances(), st.data())
def test_flip_all_reds_always_verifies(instance, data):
    demand = data.draw(st.sets(st.sampled_from(range(instance.n))))
    assert verify(instance, flip_all_reds(instance), demand).valid

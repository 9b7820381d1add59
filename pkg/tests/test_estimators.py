from fractions import Fraction

import networkx as nx
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from illusionfree import IllusionEliminator
from illusionfree.estimators import check_instance
from illusionfree.formats import emit_instance
from illusionfree.graph import InstanceError, illusion_set


def test_params_and_clone():
    est = IllusionEliminator(algo="ptas", epsilon=0.5)
    params = est.get_params()
    assert params == {"algo": "ptas", "p": None, "epsilon": 0.5, "max_red": 24}
    copy = clone(est)
    assert copy.get_params() == params and copy is not est


def test_fit_transform(cascade):
    est = IllusionEliminator(algo="oracle").fit(cascade)
    assert est.size_ == 4 and est.verified_ and est.solver_ == "oracle"
    assert est.recoloring_.flipped == {5, 6, 7, 8}
    assert not illusion_set(est.transform(cascade))
    assert not illusion_set(IllusionEliminator().fit_transform(cascade))


def test_not_fitted(cascade):
    with pytest.raises(NotFittedError):
        IllusionEliminator().transform(cascade)


def test_input_coercion(square):
    assert check_instance(emit_instance(square)) == square
    g = nx.DiGraph()
    g.add_nodes_from([("a", {"color": "B"}), ("b", {"color": "R"}), ("c", {"color": "R"})])
    g.add_edges_from([("a", "b"), ("a", "c")])
    inst = check_instance(g)
    assert inst.colors == "BRR" and inst.edges == ((0, 1), (0, 2))
    assert check_instance(g, Fraction(1, 3)).p == Fraction(1, 3)
    g.add_node("d")
    with pytest.raises(InstanceError):
        check_instance(g)
    with pytest.raises(TypeError):
        check_instance(42)


def test_p_override_and_demand(square):
    est = IllusionEliminator(p=0).fit(square)
    assert est.size_ == 0
    est = IllusionEliminator().fit(square, demand=[0])
    assert est.size_ == 1 and est.verified_


def test_unknown_algorithm(square):
    with pytest.raises(ValueError):
        IllusionEliminator(algo="magic").fit(square)

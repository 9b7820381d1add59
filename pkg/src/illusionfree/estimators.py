"""Estimator-style wrapper around the solvers.

The estimator is fit on a single instance rather than a sample matrix:
``fit`` computes the recoloring and ``transform`` applies it.
"""
from __future__ import annotations

from fractions import Fraction

import networkx as nx
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .formats import parse_instance
from .graph import Instance, InstanceError, apply_recoloring, verify
from .oracle import DEFAULT_MAX_RED
from .solvers import ALGORITHMS, solve


def check_instance(X, p=None) -> Instance:
    """Coerce ``X`` into an Instance.

    Accepts an Instance, canonical instance text, or a networkx DiGraph
    whose nodes carry a ``color`` attribute of ``"R"`` or ``"B"``.  A
    given ``p`` overrides the instance's threshold.
    """
    if isinstance(X, Instance):
        instance = X
    elif isinstance(X, str):
        instance = parse_instance(X)
    elif isinstance(X, nx.DiGraph):
        nodes = sorted(X.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        try:
            colors = "".join(X.nodes[v]["color"] for v in nodes)
        except KeyError:
            raise InstanceError("every node needs a 'color' attribute") from None
        edges = [(index[a], index[b]) for a, b in X.edges]
        instance = Instance(len(nodes), edges, colors, Fraction(1, 2) if p is None else p)
    else:
        raise TypeError(f"cannot build an instance from {type(X).__name__}")
    if p is not None and Fraction(p) != instance.p:
        instance = instance.with_p(p)
    return instance


class IllusionEliminator(TransformerMixin, BaseEstimator):
    """Minimum red-to-blue recoloring that removes every p-illusion.

    Parameters
    ----------
    algo : one of ``ALGORITHMS``; ``"auto"`` picks by structure.
    p : threshold override, or None to keep the instance's own.
    epsilon : accuracy for the ``"ptas"`` algorithm.
    max_red : size guard for the ``"oracle"`` algorithm.
    """

    def __init__(self, algo="auto", p=None, epsilon=1.0, max_red=DEFAULT_MAX_RED):
        self.algo = algo
        self.p = p
        self.epsilon = epsilon
        self.max_red = max_red

    def fit(self, X, y=None, demand=None):
        if self.algo not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algo!r}")
        instance = check_instance(X, self.p)
        result = solve(
            instance, self.algo, demand=demand, epsilon=Fraction(self.epsilon),
            max_red=self.max_red,
        )
        self.instance_ = instance
        self.recoloring_ = result.recoloring
        self.solver_ = result.solver
        self.details_ = result.details
        self.size_ = result.recoloring.size
        self.verified_ = verify(instance, result.recoloring, demand).valid
        return self

    def transform(self, X) -> Instance:
        """Apply the fitted recoloring to ``X`` (normally the fitted instance)."""
        if not hasattr(self, "recoloring_"):
            raise NotFittedError("call fit before transform")
        return apply_recoloring(check_instance(X, self.p), self.recoloring_)

"""Estimator-style front end so the computation composes with ML tooling.

TemporalBetweenness follows the scikit-learn protocol (constructor only
stores parameters, ``fit`` computes, fitted attributes end in an
underscore, ``get_params``/``set_params`` for pipelines and grid
search) without depending on scikit-learn itself.
"""
from __future__ import annotations

import inspect
import os

from .costs import ConfigError, CRITERION_NAMES
from .driver import NodeBetweenness, node_betweenness
from .graph import TemporalGraph, parse_edge_list


def check_criterion(name: str) -> str:
    if name not in CRITERION_NAMES:
        raise ConfigError(
            f"criterion must be one of {', '.join(CRITERION_NAMES)}; got {name!r}"
        )
    return name


def check_beta(beta) -> int | None:
    """Accept None, 'inf', or a non-negative int; return the sentinel form."""
    if beta is None or beta == "inf":
        return None
    if isinstance(beta, bool) or not isinstance(beta, int):
        try:
            beta = int(beta)
        except (TypeError, ValueError):
            raise ConfigError(f"beta must be a non-negative integer or 'inf', got {beta!r}")
    if beta < 0:
        raise ConfigError(f"beta must be non-negative, got {beta}")
    return beta


def as_temporal_graph(X, undirected: bool = False) -> TemporalGraph:
    """Coerce a TemporalGraph, edge-list text, or a path into a graph."""
    if isinstance(X, TemporalGraph):
        return X
    if isinstance(X, (str, os.PathLike)):
        if isinstance(X, str) and ("\n" in X or not os.path.exists(X)):
            return parse_edge_list(X, undirected=undirected)
        with open(X, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh, undirected=undirected)
    raise ConfigError(f"cannot interpret {type(X).__name__} as a temporal graph")


class _ParamsMixin:
    """get_params/set_params over the constructor signature, sklearn-style."""

    @classmethod
    def _param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [p for p in sig.parameters if p != "self"]

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = set(self._param_names())
        for key, value in params.items():
            if key not in valid:
                raise ConfigError(f"invalid parameter {key!r} for {type(self).__name__}")
            setattr(self, key, value)
        return self


class TemporalBetweenness(_ParamsMixin):
    """Compute per-node temporal betweenness as a fit-style estimator.

    Parameters mirror the driver: optimality criterion token, waiting
    bound (None or "inf" for unrestricted), exact or fast arithmetic,
    worker count, and whether edge-list input should be symmetrised.

    After ``fit(X)`` the estimator exposes ``scores_`` (label -> score),
    ``result_`` (the full NodeBetweenness), and ``n_nodes_``/``n_edges_``.
    """

    def __init__(
        self,
        criterion: str = "sh",
        beta: int | str | None = None,
        mode: str = "exact",
        workers: int = 1,
        undirected: bool = False,
    ) -> None:
        self.criterion = criterion
        self.beta = beta
        self.mode = mode
        self.workers = workers
        self.undirected = undirected

    def fit(self, X, y=None) -> "TemporalBetweenness":
        check_criterion(self.criterion)
        beta = check_beta(self.beta)
        graph = as_temporal_graph(X, undirected=self.undirected)
        self.result_: NodeBetweenness = node_betweenness(
            graph,
            criterion=self.criterion,
            beta=beta,
            mode=self.mode,
            workers=self.workers,
        )
        self.scores_ = self.result_.as_dict()
        self.n_nodes_ = graph.n
        self.n_edges_ = graph.m
        return self

    def fit_transform(self, X, y=None) -> list:
        """Fit and return the score vector in node-id order."""
        return self.fit(X, y).result_.values

    def ranking(self) -> list[tuple[str, object]]:
        if not hasattr(self, "result_"):
            raise ConfigError("estimator is not fitted; call fit first")
        return self.result_.ranking()

"""scikit-learn compatible front ends."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .approx import approx_4_run
from .bound import compute_clb
from .exact import DEFAULT_LIMIT, brute_force_opt
from .graph import DEFAULT_TABLE_LIMIT, build_intersection_table
from .greedy import VARIANT_A, DesignChoices, greedy_join, run_A_star
from .partition import Partition, max_disagreement
from .validation import check_graph

_METHODS = ("A", "A*", "greedy", "approx4", "exact")


class MinMaxCorrelationClustering(ClusterMixin, BaseEstimator):
    """Cluster the nodes of a graph under the min max disagreement objective.

    Parameters
    ----------
    method : {"A", "A*", "greedy", "approx4", "exact"}
        ``"A"`` runs greedy joining with the default design choices from the
        4-approximation; ``"A*"`` keeps the best of all 24 variants;
        ``"greedy"`` uses ``choices``; ``"exact"`` enumerates every partition
        (small graphs only).
    choices : DesignChoices or str, optional
        Design choices for ``method="greedy"``, e.g.
        ``"largest_degree/decreasing_degree/combined/strict"``.
    exact_limit : int
        Largest node count accepted by ``method="exact"``.
    n_jobs : int
        Worker processes for ``method="A*"``.
    discard_against : {"worst", "neighbor"}
        Reference disagreement for discarding a greedy join.

    Attributes
    ----------
    labels_ : ndarray of shape (n_nodes,)
    max_disagreement_ : int
    partition_ : Partition
    choices_ : DesignChoices or None
    n_joins_ : int
    """

    def __init__(self, method="A", choices=None, exact_limit=DEFAULT_LIMIT, n_jobs=1,
                 discard_against="worst"):
        self.method = method
        self.choices = choices
        self.exact_limit = exact_limit
        self.n_jobs = n_jobs
        self.discard_against = discard_against

    def fit(self, X, y=None):
        if self.method not in _METHODS:
            raise ValueError(f"method must be one of {_METHODS}, got {self.method!r}")
        g = check_graph(X)
        self.n_joins_ = 0
        self.choices_ = None
        if self.method == "exact":
            part = brute_force_opt(g, limit=self.exact_limit).argmin
        else:
            part, _ = approx_4_run(g)
            if self.method == "A*":
                part, self.choices_ = run_A_star(g, part, n_jobs=self.n_jobs,
                                                 discard_against=self.discard_against)
            elif self.method in ("A", "greedy"):
                choices = VARIANT_A if self.method == "A" else self.choices
                if choices is None:
                    raise ValueError("method='greedy' requires choices")
                if isinstance(choices, str):
                    choices = DesignChoices.parse(choices)
                self.choices_ = choices

                def count(*_):
                    self.n_joins_ += 1

                part = greedy_join(g, part, choices, on_join=count, discard_against=self.discard_against)
        self.partition_ = part
        self.labels_ = np.asarray(part.labels(), dtype=np.int64)
        self.max_disagreement_ = max_disagreement(g, part)
        self.n_features_in_ = g.node_count
        return self

    def score(self, X, y=None):
        """Negative maximum disagreement of the fitted labels on ``X``."""
        check_is_fitted(self, "labels_")
        g = check_graph(X)
        return -max_disagreement(g, Partition(self.labels_.tolist()))


class CombinatorialLowerBound(BaseEstimator):
    """Lower bound on the optimal maximum disagreement.

    Attributes
    ----------
    bound_ : int
    certificate_ : ClbCertificate
        Evidence that ``bound_`` is feasible.
    """

    def __init__(self, table_limit=DEFAULT_TABLE_LIMIT, scan=False):
        self.table_limit = table_limit
        self.scan = scan

    def fit(self, X, y=None):
        g = check_graph(X)
        table = build_intersection_table(g, limit=self.table_limit)
        self.bound_, self.certificate_ = compute_clb(g, table, scan=self.scan)
        self.n_features_in_ = g.node_count
        return self

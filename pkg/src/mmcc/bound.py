"""Combinatorial lower bound for min max correlation clustering.

For a budget ``d``, pairs with ``|N_u & N_v| > 2d`` are forced into one
cluster and pairs with ``|N_u ^ N_v| > 2d`` are forced apart by any
partition of maximum disagreement ``d``. The bound is the smallest ``d`` for
which these constraints are self-consistent and leave every node with at
most ``d`` unavoidable disagreements.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, IntersectionTable
from .partition import Partition


@dataclass
class ClbCertificate:
    d: int
    pi_d: Partition
    cluster_labels: np.ndarray  # node -> contiguous cluster index in pi_d
    compat: np.ndarray  # (k, k) bool; diagonal is the self-compatibility bit
    per_node_bound: np.ndarray
    feasible: bool
    witness: int | None = None

    def upper_set(self, v: int) -> set[int]:
        """Nodes not forced apart from the cluster of ``v`` at this budget."""
        ok = self.compat[self.cluster_labels[v]]
        return set(np.flatnonzero(ok[self.cluster_labels]).tolist())

    @property
    def max_bound(self) -> int:
        return int(self.per_node_bound.max()) if len(self.per_node_bound) else 0


def _components(table: IntersectionTable, d: int) -> tuple[int, np.ndarray]:
    forced = table.counts > 2 * d
    np.fill_diagonal(forced, False)
    return connected_components(csr_matrix(forced), directed=False)


def components_pi_d(g: Graph, table: IntersectionTable, d: int) -> Partition:
    if d < 0:
        raise ValueError("d must be nonnegative")
    _, labels = _components(table, d)
    return Partition(labels.tolist())


def _cluster_max(values: np.ndarray, labels: np.ndarray, k: int) -> np.ndarray:
    """Max of ``values[u, u']`` over every pair of clusters, as a (k, k) array."""
    order = np.argsort(labels, kind="stable")
    starts = np.searchsorted(labels[order], np.arange(k))
    block = values[np.ix_(order, order)]
    block = np.maximum.reduceat(block, starts, axis=0)
    return np.maximum.reduceat(block, starts, axis=1)


def check_feasibility(g: Graph, table: IntersectionTable, d: int) -> ClbCertificate:
    """Evaluate the bound conditions at budget ``d``."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    n = g.node_count
    if n == 0:
        return ClbCertificate(d, Partition([]), np.zeros(0, dtype=np.int64),
                              np.zeros((0, 0), dtype=bool), np.zeros(0, dtype=np.int64), True)
    k, labels = _components(table, d)
    compat = _cluster_max(table.symdiff_matrix, labels, k) <= 2 * d

    # count, per node v, the members u of N_v outside U^d of v's cluster and
    # the members of v's cluster inside N_v
    a = g.closed_adjacency.tocoo()
    rows, cols = a.row, a.col
    outside_upper = ~compat[labels[rows], labels[cols]]
    not_upper = np.bincount(rows[outside_upper], minlength=n)
    same = labels[rows] == labels[cols]
    in_cluster = np.bincount(rows[same], minlength=n)
    sizes = np.bincount(labels, minlength=k)
    per_node = not_upper + sizes[labels] - in_cluster

    feasible = bool(np.all(np.diagonal(compat))) and int(per_node.max()) <= d
    witness = None if feasible else int(np.argmax(per_node))
    return ClbCertificate(d, Partition(labels.tolist()), labels, compat, per_node, feasible, witness)


def compute_clb(g: Graph, table: IntersectionTable, scan: bool = False) -> tuple[int, ClbCertificate]:
    """Smallest feasible budget in ``[0, max_degree]`` found by bisection.

    The returned ``d`` is re-checked: ``d`` is feasible and ``d - 1`` is not.
    With ``scan=True`` every budget is evaluated and the first feasible one
    must agree with the bisection result.
    """
    lo, hi = 0, g.max_degree
    cache: dict[int, ClbCertificate] = {}

    def check(d):
        if d not in cache:
            cache[d] = check_feasibility(g, table, d)
        return cache[d]

    while lo < hi:
        mid = (lo + hi) // 2
        if check(mid).feasible:
            hi = mid
        else:
            lo = mid + 1
    d = lo
    cert = check(d)
    if not cert.feasible:
        raise AssertionError(f"budget {d} returned by bisection is infeasible")
    if d > 0 and check(d - 1).feasible:
        raise AssertionError(f"budget {d - 1} is feasible but bisection returned {d}")
    if scan:
        first = next(x for x in range(g.max_degree + 1) if check_feasibility(g, table, x).feasible)
        if first != d:
            raise AssertionError(f"feasibility is not monotone: first feasible {first}, bisection {d}")
    return d, cert


def clb_witness(g: Graph, table: IntersectionTable, d: int) -> ClbCertificate | None:
    """Certificate for ``d - 1``, which explains why no smaller bound holds."""
    return check_feasibility(g, table, d - 1) if d > 0 else None

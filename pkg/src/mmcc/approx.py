"""Combinatorial 4-approximation.

Starting from singletons, the unfixed node ``v`` of largest disagreement
proposes its majority cluster ``{u : |N_u & N_v| > |N_v| / 2}``. The cluster
is fixed unless it overlaps an earlier one or one of its members would
disagree with it in more than ``|N_v| / 4`` places; in that case no
partition beats ``|N_v| / 4`` and the current partition is returned.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .graph import Graph, IntersectionTable
from .partition import Partition, disagreement_with


@dataclass
class ApproxInfo:
    iterations: int
    terminated_early: bool


def majority_cluster(g: Graph, table: IntersectionTable | None, v: int) -> set[int]:
    """All ``u`` with ``2 |N_u & N_v| > |N_v|``.

    Without a table the counts are gathered from the two-hop neighborhood of
    ``v``, which is the only place such ``u`` can live.
    """
    g._check_node(v)
    size = len(g.adjacency[v]) + 1
    if table is not None:
        return set(np.flatnonzero(2 * table.counts[v].astype(np.int64) > size).tolist())
    counts: Counter[int] = Counter()
    for w in g.neighborhoods[v]:
        counts.update(g.neighborhoods[w])
    return {u for u, c in counts.items() if 2 * c > size}


def approx_4_run(g: Graph, table: IntersectionTable | None = None) -> tuple[Partition, ApproxInfo]:
    p = Partition.singletons(g.node_count)
    fixed = np.zeros(g.node_count, dtype=bool)
    # unfixed nodes are singletons, so their disagreement is their degree;
    # a stable sort by decreasing degree breaks ties towards smaller ids
    order = np.argsort(-g.degree, kind="stable")
    iterations = 0
    for v in order.tolist():
        if fixed[v]:
            continue
        iterations += 1
        cluster = majority_cluster(g, table, v)
        if fixed[list(cluster)].any():
            return p, ApproxInfo(iterations, True)
        size = len(g.adjacency[v]) + 1
        if any(4 * disagreement_with(g, u, cluster) > size for u in cluster):
            return p, ApproxInfo(iterations, True)
        members = sorted(cluster)
        for u in members[1:]:
            p.join(p.cluster_of[members[0]], p.cluster_of[u])
        fixed[members] = True
    return p, ApproxInfo(iterations, False)


def approx_4(g: Graph, table: IntersectionTable | None = None) -> Partition:
    return approx_4_run(g, table)[0]

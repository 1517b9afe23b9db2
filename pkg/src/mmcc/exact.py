"""Brute-force ground truth for small graphs.

Every set partition is enumerated as a restricted-growth string in
lexicographic order; nothing is pruned.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graph import CapacityError, Graph
from .partition import Partition, max_disagreement

DEFAULT_LIMIT = 13


def bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def restricted_growth_strings(n: int) -> Iterator[list[int]]:
    """Yield ``a`` with ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``.

    The same list object is mutated between yields.
    """
    if n == 0:
        yield []
        return
    a = [0] * n
    peak = [0] * n  # peak[i] = max(a[:i+1])
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] > peak[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        peak[i] = max(peak[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            peak[j] = peak[i]


@dataclass
class ExactResult:
    opt: int
    argmin: Partition
    partitions_examined: int
    optima: list[Partition] = field(default_factory=list)


def _check_size(n: int, limit: int | None) -> None:
    if limit is not None and n > limit:
        raise CapacityError(f"n={n} exceeds the exact-solver limit {limit} (Bell({n}) = {bell(n)} partitions)")


def brute_force_opt(g: Graph, limit: int | None = DEFAULT_LIMIT, keep_optima: bool = False) -> ExactResult:
    n = g.node_count
    _check_size(n, limit)
    nbr = [sum(1 << u for u in g.neighborhoods[v]) for v in range(n)]
    best = None
    best_rgs: list[int] = []
    optima: list[list[int]] = []
    count = 0
    for a in restricted_growth_strings(n):
        count += 1
        masks = [0] * (max(a, default=-1) + 1)
        for v, c in enumerate(a):
            masks[c] |= 1 << v
        phi = max(((masks[c] ^ nbr[v]).bit_count() for v, c in enumerate(a)), default=0)
        if best is None or phi < best:
            best, best_rgs = phi, list(a)
            optima = [list(a)] if keep_optima else []
        elif keep_optima and phi == best:
            optima.append(list(a))
    return ExactResult(best, Partition(best_rgs), count, [Partition(o) for o in optima])


def verify_lemma1(g: Graph, p: Partition) -> bool:
    """Check both pair implications for every node pair.

    Large overlap of closed neighborhoods (> 2 phi) must put two nodes
    together; a large symmetric difference (> 2 phi) must keep them apart.
    """
    phi = max_disagreement(g, p)
    nb = g.neighborhoods
    for u in range(g.node_count):
        for v in range(u + 1, g.node_count):
            together = p.cluster_of[u] == p.cluster_of[v]
            if len(nb[u] & nb[v]) > 2 * phi and not together:
                return False
            if len(nb[u] ^ nb[v]) > 2 * phi and together:
                return False
    return True

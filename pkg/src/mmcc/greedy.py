"""Greedy joining local search and its 24 design-choice variants."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .approx import approx_4
from .graph import Graph
from .partition import Partition, disagreements


class WorstNodeTieBreak(str, Enum):
    LARGEST_DEGREE = "largest_degree"
    SMALLEST_DEGREE = "smallest_degree"


class NeighborTieBreak(str, Enum):
    INCREASING_DEGREE = "increasing_degree"
    DECREASING_DEGREE = "decreasing_degree"


class NeighborKey(str, Enum):
    COMBINED = "combined"
    INTERSECTION_ONLY = "intersection_only"
    NEG_SYMDIFF_ONLY = "neg_symdiff_only"


class DiscardRule(str, Enum):
    BASE = "base"
    STRICT = "strict"


@dataclass(frozen=True)
class DesignChoices:
    dc1: WorstNodeTieBreak = WorstNodeTieBreak.LARGEST_DEGREE
    dc2: NeighborTieBreak = NeighborTieBreak.DECREASING_DEGREE
    dc3: NeighborKey = NeighborKey.COMBINED
    dc4: DiscardRule = DiscardRule.STRICT

    def __post_init__(self):
        for name, kind in (("dc1", WorstNodeTieBreak), ("dc2", NeighborTieBreak),
                           ("dc3", NeighborKey), ("dc4", DiscardRule)):
            object.__setattr__(self, name, kind(getattr(self, name)))

    def to_dict(self) -> dict[str, str]:
        return {k: v.value for k, v in asdict(self).items()}

    def __str__(self) -> str:
        return "/".join(v.value for v in (self.dc1, self.dc2, self.dc3, self.dc4))

    @classmethod
    def parse(cls, text: str) -> "DesignChoices":
        return cls(*text.split("/"))


# the named variant A; its neighbor tie-break is not fixed by the method
# description, decreasing degree is our choice
VARIANT_A = DesignChoices()

ALL_CHOICES: tuple[DesignChoices, ...] = tuple(
    DesignChoices(*combo)
    for combo in itertools.product(WorstNodeTieBreak, NeighborTieBreak, NeighborKey, DiscardRule)
)


class MonotonicityError(AssertionError):
    pass


def _pick_worst(dis: np.ndarray, degree: np.ndarray, largest: bool) -> int:
    cands = np.flatnonzero(dis == dis.max())
    deg = degree[cands]
    target = deg.max() if largest else deg.min()
    return int(cands[np.argmax(deg == target)])


def _neighbor_order(g: Graph, w: int, choices: DesignChoices) -> list[int]:
    nw = g.neighborhoods[w]
    size_w = len(nw)
    sign = 1 if choices.dc2 is NeighborTieBreak.INCREASING_DEGREE else -1
    keyed = []
    for v in nw:
        nv = g.neighborhoods[v]
        inter = len(nw & nv)
        symdiff = size_w + len(nv) - 2 * inter
        if choices.dc3 is NeighborKey.COMBINED:
            key = inter - symdiff
        elif choices.dc3 is NeighborKey.INTERSECTION_ONLY:
            key = inter
        else:
            key = -symdiff
        keyed.append((-key, sign * (len(nv) - 1), v))
    keyed.sort()
    return [v for _, _, v in keyed]


def _joined_disagreements(g: Graph, p: Partition, dis: np.ndarray, a: int, b: int) -> dict[int, int]:
    """Disagreement of every member of ``a | b`` with the joined cluster.

    Joining changes a member's disagreement by the size of the other cluster
    minus twice its edges into that cluster, so only edges leaving the
    smaller side are visited.
    """
    ca, cb = p.clusters[a], p.clusters[b]
    if len(ca) < len(cb):
        a, b, ca, cb = b, a, cb, ca
    cross: dict[int, int] = dict.fromkeys(ca, 0)
    cross.update(dict.fromkeys(cb, 0))
    cluster_of = p.cluster_of
    for x in cb:
        for y in g.adjacency[x]:
            if cluster_of[y] == a:
                cross[x] += 1
                cross[y] += 1
    size_a, size_b = len(ca), len(cb)
    return {u: int(dis[u]) + (size_b if u in ca else size_a) - 2 * c for u, c in cross.items()}


def greedy_join(g: Graph, init: Partition, choices: DesignChoices = VARIANT_A,
                on_join: Callable[[Partition, int], None] | None = None,
                check_monotone: bool = True, discard_against: str = "worst") -> Partition:
    """Repeatedly join the cluster of a worst node with a neighbor's cluster.

    A candidate join is discarded when the largest disagreement inside the
    joined cluster exceeds the current disagreement of the worst node ``w``
    (``discard_against="worst"``) or of the candidate neighbor ``v``
    (``discard_against="neighbor"``, a much more conservative rule).

    Returns a new partition; ``init`` is left untouched. ``on_join`` is
    called with the partition and its maximum disagreement after every
    accepted join.
    """
    if init.node_count != g.node_count:
        raise ValueError("partition and graph have different node counts")
    if discard_against not in ("worst", "neighbor"):
        raise ValueError(f"discard_against must be 'worst' or 'neighbor', got {discard_against!r}")
    against_worst = discard_against == "worst"
    p = init.copy()
    if g.node_count == 0:
        return p
    dis = np.asarray(disagreements(g, p), dtype=np.int64)
    largest = choices.dc1 is WorstNodeTieBreak.LARGEST_DEGREE
    strict = choices.dc4 is DiscardRule.STRICT
    phi = int(dis.max())
    while True:
        w = _pick_worst(dis, g.degree, largest)
        dis_w = int(dis[w])
        joined = False
        for v in _neighbor_order(g, w, choices):
            a, b = p.cluster_of[v], p.cluster_of[w]
            if a == b:
                continue
            new = _joined_disagreements(g, p, dis, a, b)
            if max(new.values()) > (dis_w if against_worst else dis[v]):
                continue
            if strict and any(dis[u] < dis_w and du == dis_w for u, du in new.items()):
                continue
            p.join(a, b)
            for u, du in new.items():
                dis[u] = du
            joined = True
            break
        if not joined:
            return p
        new_phi = int(dis.max())
        if check_monotone and new_phi > phi:
            raise MonotonicityError(f"maximum disagreement rose from {phi} to {new_phi}")
        phi = new_phi
        if on_join is not None:
            on_join(p, phi)


def run_A(g: Graph, init: Partition | None = None, discard_against: str = "worst") -> Partition:
    return greedy_join(g, approx_4(g) if init is None else init, VARIANT_A, discard_against=discard_against)


def _run_variant(args):
    g, init, choices, discard_against = args
    q = greedy_join(g, init, choices, discard_against=discard_against)
    return max(disagreements(g, q), default=0), q


def run_A_star(g: Graph, init: Partition | None = None, n_jobs: int = 1,
               discard_against: str = "worst") -> tuple[Partition, DesignChoices]:
    """Best of all 24 variants from the same initialization.

    Ties go to the earliest variant in ``ALL_CHOICES`` order.
    """
    if init is None:
        init = approx_4(g)
    jobs = [(g, init, c, discard_against) for c in ALL_CHOICES]
    if n_jobs == 1:
        results = list(map(_run_variant, jobs))
    else:
        with ProcessPoolExecutor(max_workers=None if n_jobs < 1 else n_jobs) as pool:
            results = list(pool.map(_run_variant, jobs))
    best = min(range(len(results)), key=lambda i: results[i][0])
    return results[best][1], ALL_CHOICES[best]

"""Partitions of the node set and the min max disagreement objective."""
from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph


class Partition:
    """Assignment of every node to exactly one cluster.

    Cluster ids are stable across joins (the surviving id belongs to the
    larger cluster, ties to the smaller id) and need not be contiguous.
    """

    def __init__(self, cluster_of: Sequence[int]):
        self.cluster_of = list(cluster_of)
        self.clusters: dict[int, set[int]] = {}
        for v, c in enumerate(self.cluster_of):
            self.clusters.setdefault(c, set()).add(v)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(range(n))

    @classmethod
    def from_clusters(cls, n: int, clusters: Iterable[Iterable[int]]) -> "Partition":
        cluster_of = [-1] * n
        for i, cluster in enumerate(clusters):
            for v in cluster:
                if cluster_of[v] != -1:
                    raise ValueError(f"node {v} appears in two clusters")
                cluster_of[v] = i
        missing = [v for v, c in enumerate(cluster_of) if c == -1]
        if missing:
            raise ValueError(f"nodes {missing} are not covered")
        return cls(cluster_of)

    @property
    def node_count(self) -> int:
        return len(self.cluster_of)

    def __len__(self) -> int:
        return len(self.clusters)

    def cluster(self, v: int) -> set[int]:
        return self.clusters[self.cluster_of[v]]

    def join(self, a: int, b: int) -> int:
        """Merge clusters ``a`` and ``b`` in place and return the surviving id."""
        if a == b:
            raise ValueError("cannot join a cluster with itself")
        if a not in self.clusters or b not in self.clusters:
            raise KeyError(f"unknown cluster id {a if a not in self.clusters else b}")
        ca, cb = self.clusters[a], self.clusters[b]
        if (len(ca), -a) < (len(cb), -b):
            a, b, ca, cb = b, a, cb, ca
        for v in cb:
            self.cluster_of[v] = a
        ca |= cb
        del self.clusters[b]
        return a

    def copy(self) -> "Partition":
        return Partition(self.cluster_of)

    def as_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(c) for c in self.clusters.values())

    def labels(self) -> list[int]:
        """Cluster ids renumbered ``0..k-1`` in order of first appearance."""
        renumber: dict[int, int] = {}
        return [renumber.setdefault(c, len(renumber)) for c in self.cluster_of]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.as_sets() == other.as_sets()

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, sorted(c))) + "}"
                         for c in sorted(self.clusters.values(), key=min))
        return f"Partition({body})"


def singletons(n: int) -> Partition:
    return Partition.singletons(n)


def join_clusters(p: Partition, a: int, b: int) -> Partition:
    """Return a copy of ``p`` with clusters ``a`` and ``b`` merged."""
    q = p.copy()
    q.join(a, b)
    return q


def disagreement_with(g: Graph, v: int, cluster) -> int:
    """``|cluster ^ N_v|`` without materializing the symmetric difference."""
    nbrs = g.adjacency[v]
    inside = 1 if v in cluster else 0
    inside += sum(1 for u in cluster if u in nbrs) if len(cluster) < len(nbrs) else sum(1 for u in nbrs if u in cluster)
    return len(cluster) + len(nbrs) + 1 - 2 * inside


def node_disagreement(g: Graph, p: Partition, v: int) -> int:
    g._check_node(v)
    return disagreement_with(g, v, p.cluster(v))


def disagreements(g: Graph, p: Partition) -> list[int]:
    return [disagreement_with(g, v, p.cluster(v)) for v in range(g.node_count)]


def max_disagreement(g: Graph, p: Partition) -> int:
    if p.node_count != g.node_count:
        raise ValueError("partition and graph have different node counts")
    return max(disagreements(g, p), default=0)


def format_partition(g: Graph, p: Partition) -> str:
    """One ``label<TAB>cluster`` line per node, clusters numbered contiguously."""
    return "".join(f"{g.labels[v]}\t{c}\n" for v, c in enumerate(p.labels()))


def write_partition(g: Graph, p: Partition, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_partition(g, p))


def parse_partition(g: Graph, text: str) -> Partition:
    index = {lab: v for v, lab in enumerate(g.labels)}
    cluster_of = [-1] * g.node_count
    for line in text.splitlines():
        if not line.strip():
            continue
        lab, c = line.split("\t")
        cluster_of[index[int(lab)]] = int(c)
    if -1 in cluster_of:
        raise ValueError("partition file does not cover every node")
    return Partition(cluster_of)

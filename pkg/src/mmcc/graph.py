"""Graphs as the positive edges of a complete signed graph.

Every pair of nodes that is not an edge is implicitly a negative (repulsive)
edge. Neighborhoods are *closed*: ``N_v`` contains ``v`` itself.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp

log = logging.getLogger(__name__)

# dense tables above this many nodes are refused
DEFAULT_TABLE_LIMIT = 20_000


class ParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class CapacityError(MemoryError):
    """An exact or dense computation was refused because of its size."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph on nodes ``0..n-1``.

    ``adjacency[v]`` is the open neighborhood of ``v``. ``labels[v]`` is the
    original label of internal node ``v``.
    """

    adjacency: tuple[frozenset[int], ...]
    labels: tuple = field(default=())
    self_loops_dropped: int = 0

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(self.adjacency))))
        if len(self.labels) != len(self.adjacency):
            raise ValueError("labels and adjacency differ in length")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(frozenset(a) for a in adj), tuple(labels) if labels is not None else ())

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    n = node_count

    @cached_property
    def degree(self) -> np.ndarray:
        return np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.node_count)

    @cached_property
    def max_degree(self) -> int:
        return int(self.degree.max()) if self.node_count else 0

    @property
    def edge_count(self) -> int:
        return int(self.degree.sum()) // 2

    m = edge_count

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in sorted(nbrs) if u < v]

    def neighborhood(self, v: int) -> frozenset[int]:
        """Closed neighborhood ``{v} | adjacency[v]``."""
        self._check_node(v)
        return self.adjacency[v] | {v}

    @cached_property
    def neighborhoods(self) -> tuple[frozenset[int], ...]:
        return tuple(a | {v} for v, a in enumerate(self.adjacency))

    @cached_property
    def closed_adjacency(self) -> sp.csr_matrix:
        """Sparse 0/1 matrix of closed neighborhoods (adjacency plus identity)."""
        n = self.node_count
        rows = np.repeat(np.arange(n), self.degree)
        cols = np.fromiter((u for a in self.adjacency for u in a), dtype=np.int64, count=int(self.degree.sum()))
        a = sp.csr_matrix((np.ones(len(rows), dtype=np.int32), (rows, cols)), shape=(n, n))
        return (a + sp.identity(n, dtype=np.int32, format="csr")).tocsr()

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise IndexError(f"node {v} out of range for n={self.node_count}")

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count}, max_degree={self.max_degree})"


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighborhood(v)


def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse a SNAP-style edge list.

    Labels are relabeled to ``0..n-1`` in order of first occurrence.
    Duplicate edges are merged and self-loops dropped (counted in
    ``Graph.self_loops_dropped``).
    """
    lines = text.splitlines() if isinstance(text, str) else text
    index: dict[int, int] = {}
    labels: list[int] = []
    edges: set[tuple[int, int]] = set()
    loops = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 2 tokens, got {len(tokens)}", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer node label in {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise ParseError(f"negative node label in {line!r}", lineno)
        ids = []
        for lab in (a, b):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            ids.append(index[lab])
        u, v = ids
        if u == v:
            loops += 1
            continue
        edges.add((u, v) if u < v else (v, u))
    if loops:
        log.warning("dropped %d self-loop line(s)", loops)
    g = Graph.from_edges(len(labels), edges, labels)
    object.__setattr__(g, "self_loops_dropped", loops)
    return g


def read_edge_list(path) -> Graph:
    with open(path, encoding="ascii") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph, original_labels: bool = True) -> str:
    lab = g.labels if original_labels else range(g.node_count)
    return "".join(f"{lab[u]} {lab[v]}\n" for u, v in g.edges())


def write_edge_list(g: Graph, path, original_labels: bool = True) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"# Nodes: {g.node_count} Edges: {g.edge_count}\n")
        fh.write(format_edge_list(g, original_labels))


class IntersectionTable:
    """Pairwise sizes ``|N_u & N_v|`` of closed neighborhoods.

    Stored as a dense symmetric matrix; the diagonal holds ``|N_v|``.
    """

    def __init__(self, counts: np.ndarray):
        self.counts = counts

    @property
    def node_count(self) -> int:
        return self.counts.shape[0]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return int(self.counts[u, v])

    def size(self, v: int) -> int:
        return int(self.counts[v, v])

    def symdiff(self, u: int, v: int) -> int:
        c = self.counts
        return int(c[u, u]) + int(c[v, v]) - 2 * int(c[u, v])

    @cached_property
    def symdiff_matrix(self) -> np.ndarray:
        c = self.counts.astype(np.int32)
        diag = np.diagonal(c)
        return diag[:, None] + diag[None, :] - 2 * c

    def __eq__(self, other):
        if not isinstance(other, IntersectionTable):
            return NotImplemented
        return np.array_equal(self.counts, other.counts)


def _count_dtype(max_degree: int):
    return np.uint16 if max_degree + 1 < np.iinfo(np.uint16).max else np.int32


def build_intersection_table(g: Graph, method: str = "sparse", limit: int | None = DEFAULT_TABLE_LIMIT) -> IntersectionTable:
    """Intersection sizes for all node pairs.

    ``method="counting"`` increments ``I[u, v]`` for every node ``w`` and
    every pair ``u, v`` in ``N_w``. ``method="sparse"`` obtains the same
    counts as the product ``A @ A`` of the closed adjacency matrix.
    """
    n = g.node_count
    if limit is not None and n > limit:
        raise CapacityError(f"intersection table for n={n} exceeds limit {limit} "
                            f"({n * n} entries); use skip_clb or raise the limit")
    dtype = _count_dtype(g.max_degree)
    if method == "sparse":
        a = g.closed_adjacency
        counts = (a @ a).toarray().astype(dtype)
    elif method == "counting":
        counts = np.zeros((n, n), dtype=dtype)
        for nbhd in g.neighborhoods:
            idx = np.fromiter(nbhd, dtype=np.int64, count=len(nbhd))
            counts[np.ix_(idx, idx)] += 1
    else:
        raise ValueError(f"unknown method {method!r}")
    return IntersectionTable(counts)

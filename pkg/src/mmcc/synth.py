"""Planted-partition instances: disjoint cliques with random pair flips."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class SynthSpec:
    cliques: int = 10
    size: int = 10
    flips: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.cliques < 1 or self.size < 1:
            raise ValueError("cliques and size must be positive")
        pairs = self.node_count * (self.node_count - 1) // 2
        if not 0 <= self.flips <= pairs:
            raise ValueError(f"flips must lie in [0, {pairs}], got {self.flips}")

    @property
    def node_count(self) -> int:
        return self.cliques * self.size

    @property
    def name(self) -> str:
        return f"synth-k{self.cliques}-s{self.size}-f{self.flips}-seed{self.seed}"


def _pair_from_index(idx: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # row u holds pairs (u, u+1..n-1); the first index of row u is u*(2n-u-1)/2
    starts = np.arange(n) * (2 * n - np.arange(n) - 1) // 2
    u = np.searchsorted(starts, idx, side="right") - 1
    v = idx - starts[u] + u + 1
    return u, v


def planted_edges(spec: SynthSpec) -> set[tuple[int, int]]:
    s = spec.size
    return {(c * s + i, c * s + j) for c in range(spec.cliques) for i in range(s) for j in range(i + 1, s)}


def planted_partition_graph(spec: SynthSpec) -> Graph:
    """Flip ``spec.flips`` distinct pairs, drawn without replacement.

    Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64).
    """
    n = spec.node_count
    edges = planted_edges(spec)
    rng = np.random.default_rng(spec.seed)
    idx = rng.choice(n * (n - 1) // 2, size=spec.flips, replace=False)
    for u, v in zip(*_pair_from_index(np.sort(idx), n)):
        edges ^= {(int(u), int(v))}
    return Graph.from_edges(n, edges)

"""Input checks shared by the estimators."""
from __future__ import annotations

import numpy as np
import scipy.sparse as sp

from .graph import Graph


def check_graph(X) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepts a ``Graph``, or a square symmetric adjacency matrix (dense or
    scipy sparse) whose nonzero off-diagonal entries are positive edges.
    The diagonal is ignored.
    """
    if isinstance(X, Graph):
        return X
    if sp.issparse(X):
        a = sp.coo_matrix(X)
        shape = a.shape
        mask = (a.data != 0) & (a.row != a.col)
        rows, cols = a.row[mask], a.col[mask]
    else:
        arr = np.asarray(X)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d adjacency matrix, got {arr.ndim}-d input")
        shape = arr.shape
        if shape[0] == shape[1] and shape[0]:
            arr = arr.copy()
            np.fill_diagonal(arr, 0)
        rows, cols = np.nonzero(arr)
    if shape[0] != shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {shape}")
    pairs = set(zip(rows.tolist(), cols.tolist()))
    if any((v, u) not in pairs for u, v in pairs):
        raise ValueError("adjacency matrix must be symmetric")
    return Graph.from_edges(shape[0], ((u, v) for u, v in pairs if u < v))

"""scikit-learn style wrappers: a square coloring as a vertex labelling."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_plane_graph
from .color import color_square_17, greedy_square_coloring
from .reduce import MAX_DEGREE, PALETTE_SIZE


class SquareColorer(ClusterMixin, BaseEstimator):
    """Label every vertex so that vertices within distance 2 differ.

    Parameters
    ----------
    palette_size : int, default=17
        Colors available to the reduction algorithm.
    method : {"reduction", "greedy"}, default="reduction"
        ``"reduction"`` runs the 17-color reduction scheme (connected graphs
        with maximum degree 5); ``"greedy"`` is first-fit by vertex id and
        accepts any plane graph.

    Attributes
    ----------
    labels_ : ndarray of shape (n_vertices,)
        Color of each vertex, starting at 1.
    n_colors_ : int
        Number of distinct colors used.
    """

    def __init__(self, palette_size=PALETTE_SIZE, method="reduction"):
        self.palette_size = palette_size
        self.method = method

    def fit(self, X, y=None):
        if self.method not in ("reduction", "greedy"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.method == "reduction":
            G = check_plane_graph(X, max_degree=MAX_DEGREE)
            coloring = color_square_17(G, self.palette_size)
        else:
            G = check_plane_graph(X)
            coloring = greedy_square_coloring(G)
        self.labels_ = np.asarray(coloring.colors, dtype=np.int64)
        self.n_colors_ = len(set(coloring.colors))
        self.n_vertices_ = G.n
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def max_color(self):
        check_is_fitted(self, "labels_")
        return int(self.labels_.max(initial=0))

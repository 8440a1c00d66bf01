"""Input checks shared by the estimator wrappers."""

from __future__ import annotations

from collections.abc import Mapping

from .embed import EmbeddedGraph, build_from_rotations, parse_epg
from .exceptions import DegreeTooHigh


def check_plane_graph(X, max_degree=None) -> EmbeddedGraph:
    """Coerce ``X`` to an :class:`EmbeddedGraph`.

    Accepts an embedded graph, EPG text, a list of rotations, or a dict
    mapping vertex ids to rotations.
    """
    if isinstance(X, EmbeddedGraph):
        G = X
    elif isinstance(X, str):
        G = parse_epg(X)
    elif isinstance(X, Mapping):
        G = build_from_rotations(len(X), X)
    else:
        try:
            rots = [list(r) for r in X]
        except TypeError:
            raise TypeError(f"expected a plane graph, got {type(X).__name__}") from None
        G = build_from_rotations(len(rots), rots)
    if max_degree is not None and G.max_degree > max_degree:
        raise DegreeTooHigh(f"maximum degree {G.max_degree} exceeds {max_degree}")
    return G

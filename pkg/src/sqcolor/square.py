"""Graph squares and an exact chromatic-number oracle for small graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .embed import EmbeddedGraph
from .exceptions import TooLarge

__all__ = ["PlainGraph", "chi2_exact", "chi_exact", "square_graph"]

DEFAULT_LIMIT = 20


@dataclass(frozen=True)
class PlainGraph:
    """Simple undirected graph without an embedding."""

    n: int
    adjacency: tuple  # adjacency[v] is a frozenset

    @classmethod
    def from_edges(cls, n, edges):
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    @classmethod
    def from_embedded(cls, G: EmbeddedGraph):
        return cls(G.n, tuple(G.neighbors(v) for v in range(G.n)))

    def edges(self):
        return sorted((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    def degree(self, v):
        return len(self.adjacency[v])

    @property
    def max_degree(self):
        return max((len(a) for a in self.adjacency), default=0)


def square_graph(G) -> PlainGraph:
    """Join every pair of vertices at distance 1 or 2."""
    if isinstance(G, EmbeddedGraph):
        G = PlainGraph.from_embedded(G)
    adj = []
    for v in range(G.n):
        near = set(G.adjacency[v])
        for u in G.adjacency[v]:
            near |= G.adjacency[u]
        near.discard(v)
        adj.append(frozenset(near))
    return PlainGraph(G.n, tuple(adj))


def _greedy_clique(masks, n):
    best = 0
    for start in range(n):
        clique = 1 << start
        cand = masks[start]
        while cand:
            # extend by the candidate with most candidate neighbors; ties by id
            pick, score = -1, -1
            c = cand
            while c:
                low = c & -c
                x = low.bit_length() - 1
                s = bin(masks[x] & cand).count("1")
                if s > score:
                    pick, score = x, s
                c ^= low
            clique |= 1 << pick
            cand &= masks[pick]
        best = max(best, bin(clique).count("1"))
    return best


def chi_exact(H: PlainGraph, vertex_limit: int = DEFAULT_LIMIT) -> int:
    """Chromatic number by DSATUR branch and bound.

    A greedy clique gives the lower bound; the search branches on the
    uncolored vertex of maximum saturation (ties: degree, then lowest id),
    tries only colors already in use plus one new color, and prunes any
    branch that cannot beat the best coloring found so far.

    Raises
    ------
    TooLarge
        If ``H`` has more than ``vertex_limit`` vertices.
    """
    n = H.n
    if n > vertex_limit:
        raise TooLarge(f"{n} vertices exceeds the oracle limit {vertex_limit}")
    if n == 0:
        return 0
    masks = [0] * n
    for v in range(n):
        for u in H.adjacency[v]:
            masks[v] |= 1 << u
    lower = _greedy_clique(masks, n)
    degree = [bin(m).count("1") for m in masks]
    color = [0] * n
    best = [n + 1]

    def pick():
        choice, key = -1, None
        for v in range(n):
            if color[v]:
                continue
            sat = set()
            m = masks[v]
            while m:
                low = m & -m
                c = color[low.bit_length() - 1]
                if c:
                    sat.add(c)
                m ^= low
            k = (len(sat), degree[v], -v)
            if key is None or k > key:
                choice, key = v, k
        return choice

    def search(n_colored, used):
        if used >= best[0]:
            return
        if n_colored == n:
            best[0] = used
            return
        v = pick()
        forbidden = set()
        m = masks[v]
        while m:
            low = m & -m
            forbidden.add(color[low.bit_length() - 1])
            m ^= low
        for c in range(1, min(used + 1, best[0] - 1) + 1):
            if c in forbidden:
                continue
            color[v] = c
            search(n_colored + 1, max(used, c))
            color[v] = 0
            if best[0] == lower:
                return

    search(0, 0)
    return best[0]


def chi2_exact(G, vertex_limit: int = DEFAULT_LIMIT) -> int:
    """Square chromatic number of ``G``."""
    if G.n > vertex_limit:
        raise TooLarge(f"{G.n} vertices exceeds the oracle limit {vertex_limit}")
    return chi_exact(square_graph(G), vertex_limit)

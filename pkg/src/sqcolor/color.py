"""Square colorings: verification, extension steps and the 17-color algorithm."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

from .embed import EmbeddedGraph
from .exceptions import DegreeTooHigh, NoColorAvailable, NotConnected, PartialColoring
from .metrics import n2_set
from .reduce import (
    MAX_DEGREE,
    PALETTE_SIZE,
    apply_reduction,
    find_reduction,
    iter_reductions,
)

__all__ = [
    "SquareColoring",
    "color_square_17",
    "color_square_stepwise",
    "extend_after_edge_reduction",
    "extend_after_vertex_reduction",
    "format_sqc",
    "greedy_square_coloring",
    "parse_sqc",
    "verify_square_coloring",
]


@dataclass(frozen=True)
class SquareColoring:
    """Total assignment ``colors[v]`` with colors in ``1..palette_size``."""

    colors: tuple
    palette_size: int = PALETTE_SIZE

    def __getitem__(self, v):
        return self.colors[v]

    def __len__(self):
        return len(self.colors)

    @property
    def n_colors(self) -> int:
        return len(set(self.colors))

    @property
    def max_color(self) -> int:
        return max(self.colors, default=0)


def _as_list(G, kappa):
    if isinstance(kappa, SquareColoring):
        kappa = kappa.colors
    if isinstance(kappa, Mapping):
        missing = [v for v in range(G.n) if kappa.get(v) is None]
        if missing:
            raise PartialColoring(f"no color for vertices {missing[:10]}")
        return [kappa[v] for v in range(G.n)]
    kappa = list(kappa)
    if len(kappa) < G.n or any(c is None for c in kappa[:G.n]):
        raise PartialColoring(f"coloring covers {len(kappa)} of {G.n} vertices")
    return kappa[:G.n]


def verify_square_coloring(G: EmbeddedGraph, kappa):
    """Conflicting pairs ``(u, v, distance)`` with ``u < v``; empty iff proper."""
    colors = _as_list(G, kappa)
    out = []
    for u in range(G.n):
        near = set(G.neighbors(u))
        for v in sorted(n2_set(G, u)):
            if v > u and colors[u] == colors[v]:
                out.append((u, v, 1 if v in near else 2))
    return out


def _smallest_free(used, palette, where):
    for c in range(1, palette + 1):
        if c not in used:
            return c
    raise NoColorAvailable(f"all {palette} colors are taken around {where}")


def extend_after_vertex_reduction(G, v, kappa_M, id_remap, palette_size=PALETTE_SIZE):
    """Lift a coloring of the reduced graph back to ``G`` by coloring ``v``.

    ``id_remap[m]`` is the ``G`` id of vertex ``m`` of the reduced graph.
    """
    colors = [None] * G.n
    for m, old in enumerate(id_remap):
        colors[old] = kappa_M[m]
    used = {colors[u] for u in n2_set(G, v)}
    colors[v] = _smallest_free(used, palette_size, v)
    return SquareColoring(tuple(colors), palette_size)


def extend_after_edge_reduction(G, u, v, kappa_M, palette_size=PALETTE_SIZE):
    """Recolor ``u`` then ``v`` after putting edge ``uv`` back."""
    colors = list(kappa_M)
    colors[u] = _smallest_free({colors[x] for x in n2_set(G, u) - {v}}, palette_size, u)
    used = {colors[x] for x in n2_set(G, v) - {u}}
    used.add(colors[u])
    colors[v] = _smallest_free(used, palette_size, v)
    return SquareColoring(tuple(colors), palette_size)


def _check_input(G):
    if G.max_degree > MAX_DEGREE:
        raise DegreeTooHigh(f"maximum degree {G.max_degree} exceeds {MAX_DEGREE}")
    if G.n > 0 and not G.is_connected():
        raise NotConnected("color_square_17 needs a connected graph; color components separately")


def color_square_17(G: EmbeddedGraph, palette_size: int = PALETTE_SIZE) -> SquareColoring:
    """Square coloring of a connected plane graph with maximum degree <= 5.

    Reduces the graph step by step until one vertex is left, colors it 1,
    then undoes the steps in reverse, giving each restored vertex the
    smallest color free in its distance-2 neighborhood.

    Raises
    ------
    DegreeTooHigh, NotConnected
        On inputs outside the supported class.
    IrreducibleGraph
        If some intermediate graph has no reducible configuration.
    """
    _check_input(G)
    steps = list(iter_reductions(G, palette_size))
    colors = [None] * G.n
    gone = set()
    for step in steps:
        if step.witness.kind == "vertex":
            gone.add(step.witness.vertices[0])
    for v in range(G.n):
        if v not in gone:
            colors[v] = 1
    for step in reversed(steps):
        w = step.witness
        if w.kind == "vertex":
            (v,) = w.vertices
            (near,) = step.n2_sets
            colors[v] = _smallest_free({colors[x] for x in near}, palette_size, v)
        else:
            u, v = w.vertices
            near_u, near_v = step.n2_sets
            colors[u] = _smallest_free({colors[x] for x in near_u}, palette_size, u)
            used = {colors[x] for x in near_v}
            used.add(colors[u])
            colors[v] = _smallest_free(used, palette_size, v)
    return SquareColoring(tuple(colors), palette_size)


def color_square_stepwise(G: EmbeddedGraph, palette_size: int = PALETTE_SIZE) -> SquareColoring:
    """Same algorithm built only from the public single-step functions.

    Rebuilds the embedding after every step, so it is quadratic; kept as an
    independent route for cross-checking :func:`color_square_17`.
    """
    _check_input(G)
    stack = []
    cur = G
    while cur.n > 1:
        w = find_reduction(cur, palette_size)
        M, kept = apply_reduction(cur, w, palette_size)
        stack.append((cur, w, kept))
        cur = M
    colors = tuple([1] * cur.n)
    while stack:
        cur, w, kept = stack.pop()
        if w.kind == "vertex":
            colors = extend_after_vertex_reduction(cur, w.vertices[0], colors, kept, palette_size).colors
        else:
            colors = extend_after_edge_reduction(cur, *w.vertices, colors, palette_size).colors
    return SquareColoring(colors, palette_size)


def greedy_square_coloring(G: EmbeddedGraph, order=None) -> SquareColoring:
    """First-fit coloring of the square along ``order`` (default: by id)."""
    order = range(G.n) if order is None else list(order)
    if sorted(order) != list(range(G.n)):
        raise ValueError("order must be a permutation of the vertices")
    colors = [None] * G.n
    for v in order:
        used = {colors[u] for u in n2_set(G, v)}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return SquareColoring(tuple(colors), max(colors, default=0))


# -- sqc text format --------------------------------------------------------------

def format_sqc(coloring) -> str:
    colors = coloring.colors if isinstance(coloring, SquareColoring) else tuple(coloring)
    return "sqc 1\n" + "".join(f"c {v} {c}\n" for v, c in enumerate(colors))


def parse_sqc(text: str) -> dict:
    """Map vertex -> color.  Raises ValueError naming the bad line."""
    out = {}
    header = False
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header:
            if line.split() != ["sqc", "1"]:
                raise ValueError(f"line {no}: expected 'sqc 1', got {line!r}")
            header = True
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] != "c":
            raise ValueError(f"line {no}: expected 'c <vertex> <color>', got {line!r}")
        try:
            v, c = int(parts[1]), int(parts[2])
        except ValueError:
            raise ValueError(f"line {no}: non-integer field in {line!r}") from None
        if v in out:
            raise ValueError(f"line {no}: vertex {v} colored twice")
        out[v] = c
    if not header:
        raise ValueError("missing 'sqc 1' header")
    return out

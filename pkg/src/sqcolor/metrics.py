"""Distance-2 and face-incidence statistics of a vertex.

Face counts are taken per sector: a vertex of degree ``d`` sees ``d``
face slots, one between each pair of rotation-consecutive neighbors.  On
2-connected graphs the slots are distinct faces; on graphs with cut
vertices a face may fill several slots and is counted once per slot.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .embed import EmbeddedGraph
from .exceptions import DegenerateFaces, NoSuchVertex

__all__ = [
    "VertexProfile",
    "corners",
    "face_counts",
    "is_bad5",
    "n2_set",
    "n2_upper_bound",
    "neighbor_degree_counts",
    "t5",
    "vertex_profile",
]


def _check(G, v):
    if not G.has_vertex(v):
        raise NoSuchVertex(v)


def n2_set(G: EmbeddedGraph, v: int) -> frozenset:
    """Vertices at distance 1 or 2 from ``v``."""
    _check(G, v)
    out = set(G.neighbors(v))
    for u in G.rotation(v):
        out.update(G.neighbors(u))
    out.discard(v)
    return frozenset(out)


def face_counts(G: EmbeddedGraph, v: int) -> Counter:
    """Map face degree -> number of sector slots of ``v`` with that face."""
    _check(G, v)
    faces = G.faces
    return Counter(faces[i].degree for i in G.sector_faces(v))


def neighbor_degree_counts(G: EmbeddedGraph, v: int) -> Counter:
    _check(G, v)
    return Counter(G.degree(u) for u in G.rotation(v))


def _f(counts, lo, hi=None):
    return sum(c for d, c in counts.items() if d >= lo and (hi is None or d <= hi))


def _degenerate_reason(G, v):
    """Why the face-count bound cannot be trusted at ``v``, or None.

    The bound charges two saved slots per incident triangle and one per
    incident 4-face.  The savings are disjoint when every small face is a
    simple cycle, no two small slots share a vertex set, no 4-face has its
    far corner adjacent to ``v``, and the 4-faces sharing a far corner do
    not close up around ``v``.
    """
    faces = G.faces
    rot = G.rotation(v)
    slots = []
    for i, fi in enumerate(G.sector_faces(v)):
        f = faces[fi]
        if f.degree not in (3, 4):
            continue
        if len(f.vertices) != f.degree:
            return f"face {f.walk} around {v} repeats a vertex"
        slots.append((i, f))
    for a in range(len(slots)):
        for b in range(a + 1, len(slots)):
            if slots[a][1].vertices == slots[b][1].vertices:
                return f"faces {slots[a][1].walk} and {slots[b][1].walk} share a boundary"
    far = []
    for i, f in slots:
        if f.degree == 4:
            j = f.walk.index(v)
            x = f.walk[(j + 2) % 4]
            if G.adjacent(v, x):
                return f"4-face {f.walk} has its far corner {x} adjacent to {v}"
            far.append(x)
    if rot and len(far) == len(rot) and len(set(far)) == 1:
        return f"every face around {v} is a 4-face through {far[0]}"
    return None


def n2_upper_bound(G: EmbeddedGraph, v: int) -> int:
    """Sum of neighbor degrees minus twice the 3-face slots minus the 4-face slots.

    Raises
    ------
    DegenerateFaces
        When the small faces around ``v`` overlap (K3, C4, K_{2,3}, the
        inner vertices of short paths, ...), where the formula undercounts.
    """
    _check(G, v)
    reason = _degenerate_reason(G, v)
    if reason is not None:
        raise DegenerateFaces(reason)
    fc = face_counts(G, v)
    return sum(G.degree(u) for u in G.rotation(v)) - 2 * fc[3] - fc[4]


def is_bad5(G: EmbeddedGraph, v: int) -> bool:
    """A 5-vertex with exactly four triangular face slots."""
    return G.degree(v) == 5 and face_counts(G, v)[3] == 4


def _edge_side_degrees(G, u, v):
    faces = G.faces
    return faces[G.face_of_dart(u, v)].degree, faces[G.face_of_dart(v, u)].degree


def corners(G: EmbeddedGraph, v: int) -> frozenset:
    """5-neighbors ``u`` of a bad 5-vertex ``v`` whose edge ``uv`` has a
    3-face on one side and a 5+-face on the other.  Empty unless ``v`` is bad."""
    _check(G, v)
    if not is_bad5(G, v):
        return frozenset()
    out = set()
    for u in G.rotation(v):
        if G.degree(u) != 5:
            continue
        a, b = _edge_side_degrees(G, u, v)
        if (a == 3 and b >= 5) or (b == 3 and a >= 5):
            out.add(u)
    return frozenset(out)


def t5(G: EmbeddedGraph, u: int) -> int:
    """Number of bad 5-neighbors having ``u`` as a corner.

    Only meaningful for a 5-vertex with at most three triangular slots;
    returns 0 elsewhere.
    """
    _check(G, u)
    if G.degree(u) != 5 or face_counts(G, u)[3] > 3:
        return 0
    return sum(1 for v in G.rotation(u) if u in corners(G, v))


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    degree: int
    n2_size: int
    f_counts: dict = field(hash=False)
    n_counts: dict = field(hash=False)
    is_bad5: bool
    corners: frozenset
    t5: int

    @property
    def f3(self):
        return self.f_counts.get(3, 0)

    @property
    def f4(self):
        return self.f_counts.get(4, 0)

    @property
    def f5plus(self):
        return _f(self.f_counts, 5)

    def n(self, i):
        return self.n_counts.get(i, 0)

    def format(self) -> str:
        fc = " ".join(f"f{d}={c}" for d, c in sorted(self.f_counts.items()))
        nc = " ".join(f"n{d}={c}" for d, c in sorted(self.n_counts.items()))
        cs = ",".join(str(c) for c in sorted(self.corners)) or "-"
        return (f"vertex {self.vertex} degree {self.degree} n2 {self.n2_size} "
                f"{fc} {nc} bad5 {int(self.is_bad5)} corners {cs} t5 {self.t5}").replace("  ", " ")


def vertex_profile(G: EmbeddedGraph, v: int) -> VertexProfile:
    _check(G, v)
    return VertexProfile(
        vertex=v,
        degree=G.degree(v),
        n2_size=len(n2_set(G, v)),
        f_counts=dict(face_counts(G, v)),
        n_counts=dict(neighbor_degree_counts(G, v)),
        is_bad5=is_bad5(G, v),
        corners=corners(G, v),
        t5=t5(G, v),
    )

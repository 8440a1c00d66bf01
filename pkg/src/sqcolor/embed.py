"""Plane graphs stored as rotation systems.

Every vertex carries the counterclockwise cyclic order of its neighbors.
Faces are recovered by dart tracing: the dart following ``u -> v`` is
``v -> pred_v(u)``, where ``pred_v`` is the clockwise neighbor of ``u``
around ``v``.  With counterclockwise rotations this keeps each face on the
left of its darts, so bounded faces are walked counterclockwise.

The face containing dart ``v -> rot(v)[i]`` fills the angular sector at
``v`` between ``rot(v)[i]`` and ``rot(v)[i + 1]``.  The rest of the package
leans on that correspondence when it talks about "the sector faces" of a
vertex.

An isolated vertex owns a single face with an empty dart set; it is
reported with ``walk == (v,)`` and ``degree == 0``.  That keeps Euler's
formula (and the discharging total of -8) valid for the one-vertex graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exceptions import (
    AsymmetricAdjacency,
    DuplicateNeighbor,
    EdgeExists,
    EPGParseError,
    IdOutOfRange,
    NonPlanarRotation,
    NoSuchEdge,
    NoSuchVertex,
    NotOnSameFace,
    SelfLoop,
)

__all__ = [
    "EmbeddedGraph",
    "EulerReport",
    "Face",
    "add_chord",
    "build_from_rotations",
    "delete_edge",
    "delete_vertex",
    "euler_report",
    "format_epg",
    "parse_epg",
    "trace_faces",
]


@dataclass(frozen=True)
class Face:
    """A face given by its boundary walk.

    ``walk`` lists the tail vertex of each dart in traversal order, so
    repeated vertices (cut vertices, tree faces) appear once per visit and
    ``degree == len(walk)`` except for the empty face of an isolated vertex.
    """

    walk: tuple
    degree: int

    @property
    def darts(self):
        k = self.degree
        return tuple((self.walk[i], self.walk[(i + 1) % k]) for i in range(k))

    @property
    def vertices(self):
        return frozenset(self.walk)


@dataclass(frozen=True)
class EulerReport:
    components: int
    n_vertices: int
    n_edges: int
    n_faces: int
    euler_ok: bool


class EmbeddedGraph:
    """Immutable simple plane graph on vertices ``0..n-1``.

    Parameters
    ----------
    rotations : sequence of sequences of int
        ``rotations[v]`` is the counterclockwise cyclic order of the
        neighbors of ``v``.

    Raises
    ------
    IdOutOfRange, SelfLoop, DuplicateNeighbor, AsymmetricAdjacency
        On malformed adjacency.
    NonPlanarRotation
        When some connected component is not embedded in the sphere.
    """

    __slots__ = ("_rot", "_pos", "_adj", "_n_edges", "_faces", "_dart_face")

    def __init__(self, rotations: Sequence[Sequence[int]]):
        n = len(rotations)
        rot = []
        for v, cyc in enumerate(rotations):
            cyc = tuple(int(u) for u in cyc)
            for u in cyc:
                if not 0 <= u < n:
                    raise IdOutOfRange(f"vertex {v} lists neighbor {u}, expected 0..{n - 1}")
                if u == v:
                    raise SelfLoop(f"vertex {v} lists itself")
            if len(set(cyc)) != len(cyc):
                raise DuplicateNeighbor(f"vertex {v} repeats a neighbor in {list(cyc)}")
            rot.append(cyc)
        adj = [frozenset(c) for c in rot]
        for v in range(n):
            for u in rot[v]:
                if v not in adj[u]:
                    raise AsymmetricAdjacency(f"{u} is a neighbor of {v} but not vice versa")
        self._rot = tuple(rot)
        self._adj = tuple(adj)
        self._pos = tuple({u: i for i, u in enumerate(c)} for c in rot)
        self._n_edges = sum(len(c) for c in rot) // 2
        self._faces, self._dart_face = self._trace()
        self._check_genus()

    # -- construction helpers -------------------------------------------

    def _trace(self):
        faces = []
        dart_face = {}
        for v in range(self.n):
            if not self._rot[v]:
                faces.append(Face((v,), 0))
                continue
            for w in self._rot[v]:
                if (v, w) in dart_face:
                    continue
                idx = len(faces)
                walk = []
                a, b = v, w
                while (a, b) not in dart_face:
                    dart_face[(a, b)] = idx
                    walk.append(a)
                    a, b = b, self.pred(b, a)
                faces.append(Face(tuple(walk), len(walk)))
        return tuple(faces), dart_face

    def _check_genus(self):
        comp = self._component_labels()
        n_comp = max(comp, default=-1) + 1
        chi = [0] * n_comp
        for v in range(self.n):
            chi[comp[v]] += 1 - len(self._rot[v]) / 2
        for f in self._faces:
            chi[comp[f.walk[0]]] += 1
        for c, value in enumerate(chi):
            if value != 2:
                raise NonPlanarRotation(
                    f"component {c} has V - E + F = {value:g}; the rotation is not planar")

    def _component_labels(self):
        label = [-1] * self.n
        c = 0
        for s in range(self.n):
            if label[s] >= 0:
                continue
            label[s] = c
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self._rot[x]:
                    if label[y] < 0:
                        label[y] = c
                        queue.append(y)
            c += 1
        return label

    # -- basic queries ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._rot)

    @property
    def n_edges(self) -> int:
        return self._n_edges

    @property
    def rotations(self):
        return self._rot

    @property
    def faces(self):
        return self._faces

    def rotation(self, v):
        return self._rot[v]

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._rot[v])

    def adjacent(self, u, v) -> bool:
        return v in self._adj[u]

    def has_vertex(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n

    def pred(self, v, u):
        """Neighbor of ``v`` immediately clockwise of ``u``."""
        cyc = self._rot[v]
        return cyc[self._pos[v][u] - 1]

    def succ(self, v, u):
        """Neighbor of ``v`` immediately counterclockwise of ``u``."""
        cyc = self._rot[v]
        return cyc[(self._pos[v][u] + 1) % len(cyc)]

    @property
    def max_degree(self) -> int:
        return max((len(c) for c in self._rot), default=0)

    def edges(self):
        """Edges as ``(min, max)`` pairs in ascending order."""
        return [(u, v) for u in range(self.n) for v in sorted(self._adj[u]) if u < v]

    def face_of_dart(self, u, v) -> int:
        try:
            return self._dart_face[(u, v)]
        except KeyError:
            raise NoSuchEdge(f"no dart {u}->{v}") from None

    def sector_faces(self, v):
        """Indices of the faces in the sectors around ``v``, one per neighbor."""
        return [self._dart_face[(v, w)] for w in self._rot[v]]

    def components(self):
        """Vertex lists of the connected components, each ascending."""
        label = self._component_labels()
        out = [[] for _ in range(max(label, default=-1) + 1)]
        for v, c in enumerate(label):
            out[c].append(v)
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices):
        """Sub-embedding on a union of whole components, ids compacted.

        Returns ``(graph, kept)`` where ``kept[new_id] == old_id``.
        """
        kept = tuple(sorted(vertices))
        index = {old: new for new, old in enumerate(kept)}
        rots = []
        for old in kept:
            if any(u not in index for u in self._rot[old]):
                raise ValueError("induced() needs a union of whole components")
            rots.append([index[u] for u in self._rot[old]])
        return EmbeddedGraph(rots), kept

    def __eq__(self, other):
        return isinstance(other, EmbeddedGraph) and self._rot == other._rot

    def __hash__(self):
        return hash(self._rot)

    def __repr__(self):
        return f"EmbeddedGraph(n={self.n}, m={self.n_edges}, faces={len(self._faces)})"


def build_from_rotations(n: int, rotations) -> EmbeddedGraph:
    """Validate and build a plane graph from per-vertex neighbor cycles.

    ``rotations`` may be a sequence indexed by vertex or a mapping; missing
    vertices of a mapping are isolated.
    """
    if isinstance(rotations, Mapping):
        for v in rotations:
            if not 0 <= int(v) < n:
                raise IdOutOfRange(f"rotation given for vertex {v}, expected 0..{n - 1}")
        rots = [list(rotations.get(v, ())) for v in range(n)]
    else:
        rots = [list(c) for c in rotations]
        if len(rots) != n:
            raise IdOutOfRange(f"expected {n} rotations, got {len(rots)}")
    return EmbeddedGraph(rots)


def trace_faces(G: EmbeddedGraph):
    return list(G.faces)


def _check_vertex(G, v):
    if not G.has_vertex(v):
        raise NoSuchVertex(v)


def delete_vertex(G: EmbeddedGraph, v: int):
    """Remove ``v`` and compact ids.

    Returns ``(graph, kept)`` with ``kept[new_id] == old_id``; survivors
    keep their relative order.
    """
    _check_vertex(G, v)
    kept = tuple(u for u in range(G.n) if u != v)
    index = {old: new for new, old in enumerate(kept)}
    rots = [[index[w] for w in G.rotation(old) if w != v] for old in kept]
    return EmbeddedGraph(rots), kept


def delete_edge(G: EmbeddedGraph, u: int, v: int) -> EmbeddedGraph:
    _check_vertex(G, u)
    _check_vertex(G, v)
    if not G.adjacent(u, v):
        raise NoSuchEdge((u, v))
    rots = [list(c) for c in G.rotations]
    rots[u].remove(v)
    rots[v].remove(u)
    return EmbeddedGraph(rots)


def add_chord(G: EmbeddedGraph, u: int, w: int, face) -> EmbeddedGraph:
    """Insert edge ``uw`` through ``face`` (a Face or a face index).

    The chord leaves each endpoint at its first corner along the face walk,
    splitting the face in two.
    """
    _check_vertex(G, u)
    _check_vertex(G, w)
    f = G.faces[face] if isinstance(face, int) else face
    if u == w:
        raise NotOnSameFace("a chord needs two distinct endpoints")
    if G.adjacent(u, w):
        raise EdgeExists((u, w))
    if f.degree == 0 or u not in f.vertices or w not in f.vertices:
        raise NotOnSameFace(f"{u} and {w} are not both on face {f.walk}")
    rots = [list(c) for c in G.rotations]
    k = f.degree
    for x, other in ((u, w), (w, u)):
        i = f.walk.index(x)
        out = f.walk[(i + 1) % k]
        # The face occupies the sector just counterclockwise of the outgoing dart.
        cyc = rots[x]
        cyc.insert(cyc.index(out) + 1, other)
    return EmbeddedGraph(rots)


def euler_report(G: EmbeddedGraph) -> EulerReport:
    comps = len(G.components())
    n_faces = len(G.faces)
    ok = comps == 1 and G.n - G.n_edges + n_faces == 2
    return EulerReport(comps, G.n, G.n_edges, n_faces, ok)


# -- EPG text format ----------------------------------------------------------

def format_epg(G: EmbeddedGraph) -> str:
    lines = ["epg 1", f"n {G.n}"]
    for v in range(G.n):
        nbrs = " ".join(str(u) for u in G.rotation(v))
        lines.append(f"v {v}: {nbrs}" if nbrs else f"v {v}:")
    return "\n".join(lines) + "\n"


def parse_epg(text: str | Iterable[str]) -> EmbeddedGraph:
    """Parse EPG text; errors name the offending line number."""
    lines = text.splitlines() if isinstance(text, str) else list(text)
    header_seen = False
    n = None
    rots = {}
    for no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line.split() != ["epg", "1"]:
                raise EPGParseError(no, f"expected 'epg 1', got {line!r}")
            header_seen = True
            continue
        if n is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise EPGParseError(no, f"expected 'n <count>', got {line!r}")
            n = int(parts[1])
            continue
        head, sep, tail = line.partition(":")
        parts = head.split()
        if not sep or len(parts) != 2 or parts[0] != "v":
            raise EPGParseError(no, f"expected 'v <id>: <neighbors>', got {line!r}")
        try:
            v = int(parts[1])
            nbrs = [int(x) for x in tail.split()]
        except ValueError:
            raise EPGParseError(no, f"non-integer id in {line!r}") from None
        if not 0 <= v < n:
            raise EPGParseError(no, f"vertex id {v} out of range 0..{n - 1}")
        if v in rots:
            raise EPGParseError(no, f"vertex {v} listed twice")
        rots[v] = nbrs
    if not header_seen:
        raise EPGParseError(len(lines), "missing 'epg 1' header")
    if n is None:
        raise EPGParseError(len(lines), "missing 'n <count>' line")
    return build_from_rotations(n, rots)

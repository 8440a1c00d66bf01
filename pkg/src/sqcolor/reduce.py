"""Reducible configurations.

Two kinds of reduction shrink ``|V| + |E|`` while keeping every 17-coloring
of the smaller graph extendable:

* vertex deletion: remove ``v``, join some of its former neighbors by
  chords so that all of them stay pairwise within distance 2 and the
  maximum degree stays at most 5; extendable when ``|N2(v)| <= 16``;
* edge deletion: remove ``uv`` when ``|N2(u)| <= 17`` and ``|N2(v)| <= 16``.

Chords are drawn inside the disc that ``v`` and its star used to occupy,
so a chord set is embeddable exactly when no two chords cross in the
cyclic order of ``rot(v)``.  At a neighbor ``n_i`` the chord endpoints
take the old slot of ``v``, ordered by their counterclockwise offset from
``n_i`` around ``v``.

The local search only needs ``rotation``, ``degree``, ``neighbors``,
``adjacent`` and ``pred``, so it runs unchanged on an immutable
:class:`~sqcolor.embed.EmbeddedGraph` and on the mutable working graph
that :func:`iter_reductions` uses to avoid rebuilding the embedding after
every step.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations

from .embed import EmbeddedGraph, delete_edge
from .exceptions import (
    InvalidChord,
    IrreducibleGraph,
    NoSuchEdge,
    NoSuchVertex,
    StaleWitness,
)

__all__ = [
    "MAX_DEGREE",
    "PALETTE_SIZE",
    "ForbiddenConfig",
    "ReductionStep",
    "ReductionWitness",
    "apply_reduction",
    "check_family_membership",
    "classify_forbidden_configs",
    "find_edge_reduction",
    "find_reduction",
    "find_vertex_reduction",
    "format_witness",
    "iter_reductions",
    "parse_witness",
]

MAX_DEGREE = 5
PALETTE_SIZE = 17


@dataclass(frozen=True)
class ReductionWitness:
    """A certified reducible configuration.

    ``kind`` is ``"vertex"`` (``vertices == (v,)``, with ``chords``) or
    ``"edge"`` (``vertices == (u, v)`` with ``|N2(u)| >= |N2(v)|``).
    ``n2`` caches the ``|N2|`` values the check relied on.
    """

    kind: str
    vertices: tuple
    chords: tuple = ()
    tag: str = ""
    n2: tuple = ()

    def relabel(self, old_of_new):
        """Translate vertex ids through ``old_of_new[id]``."""
        m = old_of_new.__getitem__
        chords = tuple(sorted(tuple(sorted((m(a), m(b)))) for a, b in self.chords))
        return ReductionWitness(self.kind, tuple(m(x) for x in self.vertices), chords, self.tag, self.n2)


# -- local primitives (work on any graph view) -------------------------------

def _n2(g, v):
    out = set(g.neighbors(v))
    for u in g.rotation(v):
        out.update(g.neighbors(u))
    out.discard(v)
    return out


def _face_len(g, v, w, limit=4):
    """Degree of the face holding dart ``v -> w``; ``limit + 1`` if larger."""
    a, b = v, w
    for steps in range(1, limit + 1):
        a, b = b, g.pred(b, a)
        if (a, b) == (v, w):
            return steps
    return limit + 1


def _norm(chords):
    return tuple(sorted({(a, b) if a < b else (b, a) for a, b in chords}))


def _crossing(pos, k, c1, c2):
    a, b = pos[c1[0]], pos[c1[1]]
    c, d = pos[c2[0]], pos[c2[1]]
    if len({a, b, c, d}) < 4:
        return False
    lo, hi = min(a, b), max(a, b)
    return (lo < c < hi) != (lo < d < hi)


def _validate_chords(g, v, chords):
    nbrs = g.neighbors(v)
    seen = set()
    for a, b in chords:
        if a not in nbrs or b not in nbrs:
            raise InvalidChord(f"chord ({a},{b}) has an endpoint outside N({v})")
        if a == b:
            raise InvalidChord(f"chord ({a},{b}) is a loop")
        if g.adjacent(a, b):
            raise InvalidChord(f"chord ({a},{b}) duplicates an existing edge")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise InvalidChord(f"chord {key} listed twice")
        seen.add(key)
    pos = {u: i for i, u in enumerate(g.rotation(v))}
    chords = list(seen)
    for c1, c2 in combinations(chords, 2):
        if _crossing(pos, len(pos), c1, c2):
            raise InvalidChord(f"chords {c1} and {c2} cross around {v}")


def _family_ok(g, v, chords):
    """Conditions (distance <= 2 among N(v), max degree, smaller measure)
    for the graph left after deleting ``v`` and adding ``chords``."""
    rot = g.rotation(v)
    if len(chords) > len(rot):  # removing v drops 1 + d(v) from |V|+|E|
        return False
    adj = {x: set(g.neighbors(x)) for x in rot}
    for x in rot:
        adj[x].discard(v)
    for a, b in chords:
        adj[a].add(b)
        adj[b].add(a)
    for x in rot:
        if len(adj[x]) > MAX_DEGREE:
            return False
    for a, b in combinations(rot, 2):
        if b not in adj[a] and not (adj[a] & adj[b]):
            return False
    return True


def _sector_chords(g, rot, idxs):
    k = len(rot)
    out = []
    for i in idxs:
        a, b = rot[i % k], rot[(i + 1) % k]
        if a != b and not g.adjacent(a, b):
            out.append((a, b))
    return _norm(out)


def _templates(g, v):
    """Candidate chord sets from the hand-analysed local pictures, in order.

    Yields ``(tag, chords)``.  Every candidate is re-checked by the caller,
    so these only steer the search toward the usual answer quickly.
    """
    rot = g.rotation(v)
    k = len(rot)
    if k == 0:
        yield "degree-0", ()
        return
    sec = [_face_len(g, v, rot[i]) for i in range(k)]
    tri = [s == 3 for s in sec]
    R = lambda i: rot[i % k]  # noqa: E731
    if k <= 2:
        yield f"degree-{k}", _sector_chords(g, rot, range(k))
        return
    if k == 3:
        for i in range(3):
            if tri[i]:
                for a in (R(i), R(i + 1)):
                    if not g.adjacent(a, R(i + 2)):
                        yield "3-vertex-on-triangle", _norm([(a, R(i + 2))])
        for i in range(3):
            if g.degree(R(i)) <= 4:
                yield "3-vertex-small-neighbor", _norm(
                    (R(i), R(j)) for j in (i + 1, i + 2) if not g.adjacent(R(i), R(j)))
        for i in range(3):
            if sec[i] == 4 and sec[(i + 1) % 3] == 4:
                yield "3-vertex-two-4-faces", _sector_chords(g, rot, [i + 2])
        return
    if k == 4:
        for i in range(4):
            if tri[i] and tri[(i + 1) % 4] and not g.adjacent(R(i + 1), R(i + 3)):
                yield "4-vertex-adjacent-triangles", _norm([(R(i + 1), R(i + 3))])
        for i in range(2):
            if tri[i] and tri[i + 2]:
                yield "4-vertex-opposite-triangles", _sector_chords(g, rot, [i + 1, i + 3])
        for i in range(4):
            if tri[i]:
                for pair in ((1, 3), (1, 2), (2, 3)):
                    yield "4-vertex-triangle-and-4-faces", _sector_chords(g, rot, [i + p for p in pair])
        return
    if k == 5:
        gaps = [i for i in range(5) if not tri[i]]
        if not gaps:
            yield "five-triangles", ()
        elif len(gaps) == 1:
            yield "four-triangles", _sector_chords(g, rot, gaps)
        elif len(gaps) == 2:
            yield "three-triangles", _sector_chords(g, rot, gaps)


def _generic(g, v):
    """All embeddable chord sets, by size then lexicographically."""
    rot = g.rotation(v)
    k = len(rot)
    pos = {u: i for i, u in enumerate(rot)}
    cands = sorted((a, b) for a, b in combinations(sorted(rot), 2) if not g.adjacent(a, b))
    cap = {x: MAX_DEGREE + 1 - g.degree(x) for x in rot}
    for size in range(0, min(k, len(cands)) + 1):
        for combo in combinations(cands, size):
            load = dict.fromkeys(rot, 0)
            ok = True
            for a, b in combo:
                load[a] += 1
                load[b] += 1
                if load[a] > cap[a] or load[b] > cap[b]:
                    ok = False
                    break
            if not ok:
                continue
            if any(_crossing(pos, k, c1, c2) for c1, c2 in combinations(combo, 2)):
                continue
            yield combo


def _vertex_witness(g, v, palette):
    """Witness for deleting ``v``, or None."""
    n2 = len(_n2(g, v))
    if n2 > palette - 1:
        return None
    for tag, chords in _templates(g, v):
        if _family_ok(g, v, chords):
            return ReductionWitness("vertex", (v,), chords, tag, (n2,))
    for chords in _generic(g, v):
        if _family_ok(g, v, chords):
            return ReductionWitness("vertex", (v,), chords, "generic-chords", (n2,))
    return None


def _edge_ok(n2a, n2b, palette):
    return max(n2a, n2b) <= palette and min(n2a, n2b) <= palette - 1


def _edge_witness(a, b, n2a, n2b):
    if n2a >= n2b:
        return ReductionWitness("edge", (a, b), (), "edge", (n2a, n2b))
    return ReductionWitness("edge", (b, a), (), "edge", (n2b, n2a))


# -- public API on immutable graphs ------------------------------------------

def check_family_membership(G: EmbeddedGraph, v: int, chords) -> bool:
    """Whether deleting ``v`` and adding ``chords`` yields a valid smaller graph.

    Raises
    ------
    InvalidChord
        If a chord leaves N(v), repeats an edge, or crosses another chord.
    """
    if not G.has_vertex(v):
        raise NoSuchVertex(v)
    chords = [tuple(c) for c in chords]
    _validate_chords(G, v, chords)
    return _family_ok(G, v, _norm(chords))


def find_vertex_reduction(G: EmbeddedGraph, palette_size: int = PALETTE_SIZE):
    for v in range(G.n):
        w = _vertex_witness(G, v, palette_size)
        if w is not None:
            return w
    return None


def find_edge_reduction(G: EmbeddedGraph, palette_size: int = PALETTE_SIZE):
    sizes = {}
    for a, b in G.edges():
        for x in (a, b):
            if x not in sizes:
                sizes[x] = len(_n2(G, x))
        if _edge_ok(sizes[a], sizes[b], palette_size):
            return _edge_witness(a, b, sizes[a], sizes[b])
    return None


def find_reduction(G: EmbeddedGraph, palette_size: int = PALETTE_SIZE) -> ReductionWitness:
    """First vertex reduction in scan order, else first edge reduction.

    Raises
    ------
    IrreducibleGraph
        When neither exists; carries the discharging audit if ``G`` is connected.
    """
    w = find_vertex_reduction(G, palette_size)
    if w is None:
        w = find_edge_reduction(G, palette_size)
    if w is None:
        audit = None
        if G.is_connected():
            from .discharge import audit as run_audit
            audit = run_audit(G)
        raise IrreducibleGraph(f"no reducible configuration in {G!r}", audit)
    return w


def _replace_vertex(rot_of, v, chords):
    """New rotations for the neighbors of ``v`` once ``v`` is replaced by chords."""
    rot = rot_of(v)
    k = len(rot)
    pos = {u: i for i, u in enumerate(rot)}
    partners = {x: [] for x in rot}
    for a, b in chords:
        partners[a].append(b)
        partners[b].append(a)
    out = {}
    for x in rot:
        ends = sorted(partners[x], key=lambda y: (pos[y] - pos[x]) % k)
        cyc = list(rot_of(x))
        i = cyc.index(v)
        out[x] = cyc[:i] + ends + cyc[i + 1:]
    return out


def apply_reduction(G: EmbeddedGraph, w: ReductionWitness, palette_size: int = PALETTE_SIZE):
    """Build the smaller graph named by ``w``.

    Returns ``(M, kept)`` where ``kept[new_id] == old_id`` (identity for
    edge deletions).

    Raises
    ------
    StaleWitness
        If ``w`` does not describe a valid reduction of ``G``.
    """
    if w.kind == "edge":
        u, v = w.vertices
        if not (G.has_vertex(u) and G.has_vertex(v) and G.adjacent(u, v)):
            raise StaleWitness(f"edge {u}-{v} is not in the graph")
        if not _edge_ok(len(_n2(G, u)), len(_n2(G, v)), palette_size):
            raise StaleWitness(f"edge {u}-{v} does not meet the N2 bounds")
        return delete_edge(G, u, v), tuple(range(G.n))
    if w.kind != "vertex":
        raise StaleWitness(f"unknown witness kind {w.kind!r}")
    (v,) = w.vertices
    if not G.has_vertex(v):
        raise StaleWitness(f"vertex {v} is not in the graph")
    try:
        _validate_chords(G, v, w.chords)
    except InvalidChord as exc:
        raise StaleWitness(str(exc)) from None
    if len(_n2(G, v)) > palette_size - 1 or not _family_ok(G, v, _norm(w.chords)):
        raise StaleWitness(f"deleting {v} with chords {w.chords} is not a valid reduction")
    new_rot = _replace_vertex(G.rotation, v, w.chords)
    kept = tuple(x for x in range(G.n) if x != v)
    index = {old: new for new, old in enumerate(kept)}
    rots = [[index[y] for y in new_rot.get(old, G.rotation(old))] for old in kept]
    return EmbeddedGraph(rots), kept


# -- witness text format -------------------------------------------------------

def format_witness(w: ReductionWitness) -> str:
    if w.kind == "edge":
        u, v = w.vertices
        return f"W edge {u} {v} tag {w.tag}"
    chords = "".join(f"({a},{b})" for a, b in w.chords) or "-"
    return f"W vertex {w.vertices[0]} chords {chords} tag {w.tag}"


def parse_witness(line: str) -> ReductionWitness:
    parts = line.split()
    try:
        if parts[:2] == ["W", "edge"] and parts[4] == "tag":
            return ReductionWitness("edge", (int(parts[2]), int(parts[3])), (), " ".join(parts[5:]))
        if parts[:2] == ["W", "vertex"] and parts[3] == "chords" and parts[5] == "tag":
            chords = ()
            if parts[4] != "-":
                body = parts[4]
                if not (body.startswith("(") and body.endswith(")")):
                    raise ValueError(body)
                chords = tuple(tuple(int(x) for x in item.split(","))
                               for item in body[1:-1].split(")("))
                if any(len(c) != 2 for c in chords):
                    raise ValueError(body)
            return ReductionWitness("vertex", (int(parts[2]),), chords, " ".join(parts[6:]))
    except (IndexError, ValueError):
        pass
    raise ValueError(f"not a witness line: {line!r}")


# -- fast reduction chain ------------------------------------------------------

class _WorkingGraph:
    """Mutable rotation system keyed by the caller's vertex ids."""

    def __init__(self, G: EmbeddedGraph):
        self.rot = {v: list(G.rotation(v)) for v in range(G.n)}
        self.adj = {v: set(G.neighbors(v)) for v in range(G.n)}

    def rotation(self, v):
        return self.rot[v]

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.rot[v])

    def adjacent(self, u, v):
        return v in self.adj[u]

    def pred(self, v, u):
        cyc = self.rot[v]
        return cyc[cyc.index(u) - 1]

    def ball(self, seeds, radius):
        seen = set(seeds)
        frontier = list(seen)
        for _ in range(radius):
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def remove_vertex(self, v, chords):
        new_rot = _replace_vertex(self.rotation, v, chords)
        for x, cyc in new_rot.items():
            self.rot[x] = cyc
            self.adj[x].discard(v)
        for a, b in chords:
            self.adj[a].add(b)
            self.adj[b].add(a)
        del self.rot[v]
        del self.adj[v]

    def remove_edge(self, u, v):
        self.rot[u].remove(v)
        self.rot[v].remove(u)
        self.adj[u].discard(v)
        self.adj[v].discard(u)


@dataclass(frozen=True)
class ReductionStep:
    """One link of the reduction chain, in the caller's vertex ids.

    ``n2_sets`` holds ``N2(v)`` for a vertex deletion, or
    ``(N2(u) - {v}, N2(v) - {u})`` for an edge deletion, measured in the
    graph just before the step; that is all the extension needs.
    """

    witness: ReductionWitness
    n2_sets: tuple


_UNKNOWN = object()


def iter_reductions(G: EmbeddedGraph, palette_size: int = PALETTE_SIZE):
    """Reduce ``G`` until at most one vertex is left.

    Yields :class:`ReductionStep` objects.  The scan order matches
    :func:`find_reduction` on the id-compacted intermediate graphs (ids are
    only compacted, never reordered), so the chain is the same one the
    step-by-step route produces.  Status of a vertex depends only on the
    rotations within distance 2 of it, so after each step only that ball
    around the touched vertices is re-examined.

    Raises
    ------
    IrreducibleGraph
        When some intermediate graph has no reduction.
    """
    g = _WorkingGraph(G)
    alive = list(range(G.n))
    status = {}
    n2_size = {}
    heap = []  # vertices whose status is unknown or known reducible

    def size(x):
        s = n2_size.get(x)
        if s is None:
            s = n2_size[x] = len(_n2(g, x))
        return s

    def invalidate(xs):
        for x in xs:
            status.pop(x, None)
            n2_size.pop(x, None)
            heapq.heappush(heap, x)

    invalidate(alive)
    n_alive = G.n
    while n_alive > 1:
        w = None
        while heap:
            x = heap[0]
            if x not in g.rot:
                heapq.heappop(heap)
                continue
            st = status.get(x, _UNKNOWN)
            if st is _UNKNOWN:
                st = status[x] = _vertex_witness(g, x, palette_size)
            if st is None:
                heapq.heappop(heap)
                continue
            w = st
            break
        if w is None:
            for a in sorted(g.rot):
                for b in sorted(g.adj[a]):
                    if a < b and _edge_ok(size(a), size(b), palette_size):
                        w = _edge_witness(a, b, size(a), size(b))
                        break
                if w is not None:
                    break
        if w is None:
            remaining = sorted(g.rot)
            index = {old: new for new, old in enumerate(remaining)}
            M = EmbeddedGraph([[index[y] for y in g.rot[x]] for x in remaining])
            audit = None
            if M.is_connected():
                from .discharge import audit as run_audit
                audit = run_audit(M)
            raise IrreducibleGraph(f"no reducible configuration in {M!r}", audit)

        if w.kind == "vertex":
            (v,) = w.vertices
            touched = g.ball([v], 3)
            step = ReductionStep(w, (frozenset(_n2(g, v)),))
            g.remove_vertex(v, w.chords)
            touched.discard(v)
            n_alive -= 1
        else:
            u, v = w.vertices
            touched = g.ball([u, v], 2)
            step = ReductionStep(w, (frozenset(_n2(g, u) - {v}), frozenset(_n2(g, v) - {u})))
            g.remove_edge(u, v)
        invalidate(touched)
        yield step


# -- forbidden configurations ------------------------------------------------

@dataclass(frozen=True)
class ForbiddenConfig:
    """A local structure that cannot occur in a smallest counterexample."""

    rule: str
    vertices: tuple
    detail: str

    def format(self):
        return f"{self.rule} at {','.join(map(str, self.vertices))}: {self.detail}"


def classify_forbidden_configs(G: EmbeddedGraph):
    """Every occurrence of a structure the reducibility analysis rules out.

    Returns a list of :class:`ForbiddenConfig`, ordered by rule family and
    then by vertex (or face) position.
    """
    from .metrics import corners, face_counts, is_bad5

    faces = G.faces
    deg = [G.degree(v) for v in range(G.n)]
    fc = [face_counts(G, v) for v in range(G.n)]
    ncount = [[sum(1 for u in G.rotation(v) if deg[u] == i) for i in range(6)] for v in range(G.n)]
    out = []

    for v in range(G.n):
        if deg[v] <= 2:
            out.append(ForbiddenConfig("low-degree", (v,), f"vertex of degree {deg[v]}"))

    for idx, f in enumerate(faces):
        if f.degree != 3:
            continue
        tri = tuple(sorted(f.walk))
        ds = [deg[x] for x in tri]
        if min(ds) <= 3:
            out.append(ForbiddenConfig("triangle-low-degree", tri,
                                       f"3-face {idx} has a vertex of degree {min(ds)}"))
        if max(ds) <= 4:
            out.append(ForbiddenConfig("triangle-without-5-vertex", tri,
                                       f"3-face {idx} has all degrees <= 4"))

    for v in range(G.n):
        d, f3, f4 = deg[v], fc[v][3], fc[v][4]
        small = [u for u in G.rotation(v) if deg[u] <= 4]
        add = lambda rule, detail: out.append(ForbiddenConfig(rule, (v,), detail))  # noqa: E731
        if d == 3:
            if small:
                add("3-vertex-small-neighbor", f"3-vertex with neighbor of degree {deg[small[0]]}")
            if f4 >= 2:
                add("3-vertex-two-4-faces", f"3-vertex with f4={f4}")
        elif d == 4:
            if f3 >= 2:
                add("4-vertex-two-triangles", f"4-vertex with f3={f3}")
            if f3 == 1 and f4 >= 3:
                add("4-vertex-triangle-three-4-faces", f"4-vertex with f3=1, f4={f4}")
            if f3 == 1 and f4 == 2 and small:
                add("4-vertex-triangle-two-4-faces-small-neighbor",
                    f"4-vertex with f3=1, f4=2, neighbor of degree {deg[small[0]]}")
        elif d == 5:
            n3, n4 = ncount[v][3], ncount[v][4]
            if f3 == 5:
                add("5-vertex-five-triangles", "5-vertex with f3=5")
            if f3 == 2 and n3 >= 2:
                add("5-vertex-two-triangles-3-neighbors", f"5-vertex, f3=2, n3={n3}")
            if f3 == 3 and n3 >= 1:
                add("5-vertex-three-triangles-3-neighbor", f"5-vertex, f3=3, n3={n3}")
            if f3 == 3 and f4 == 2 and n4 >= 1:
                add("5-vertex-three-triangles-two-4-faces-4-neighbor",
                    f"5-vertex, f3=3, f4=2, n4={n4}")
            if f3 == 3 and f4 == 1 and n4 >= 2:
                add("5-vertex-three-triangles-one-4-face-4-neighbors",
                    f"5-vertex, f3=3, f4=1, n4={n4}")
            if f3 == 4:
                if f4 >= 1:
                    add("bad-5-vertex-with-4-face", f"5-vertex, f3=4, f4={f4}")
                if small:
                    add("bad-5-vertex-small-neighbor",
                        f"5-vertex, f3=4, neighbor of degree {deg[small[0]]}")
                if is_bad5(G, v):
                    bad = sorted(c for c in corners(G, v) if is_bad5(G, c))
                    if bad:
                        add("bad-5-vertex-bad-corner", f"corner {bad[0]} is itself a bad 5-vertex")
    return out

"""Named plane graphs and seeded random plane graphs with maximum degree 5."""

from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass

from .embed import EmbeddedGraph
from .exceptions import UnknownName, Unsatisfiable

__all__ = [
    "CORPUS_SEEDS",
    "CORPUS_SIZES",
    "NAMED_CORPUS",
    "GenSpec",
    "corpus",
    "corpus_spec",
    "from_faces",
    "gen_random_delta5",
    "named_graph",
]

CORPUS_SEEDS = range(1, 1001)
CORPUS_SIZES = (5, 10, 25, 50, 100, 300)
NAMED_CORPUS = (
    "path-1", "path-2", "path-3", "path-5", "path-8",
    "cycle-3", "cycle-4", "cycle-5", "cycle-6", "cycle-7", "cycle-12",
    "grid-1-4", "grid-2-2", "grid-3-3", "grid-4-5", "grid-6-6",
    "prism-3", "prism-4", "prism-5", "prism-8",
    "icosahedron", "dodecahedron", "bowtie", "k4",
)


def from_faces(n, faces):
    """Rotation system of a 2-cell embedding given by all its face cycles.

    The faces may come in any orientation; they are flipped into a
    consistent one first.  Consecutive ``a, b, c`` on a face mean that
    ``a`` follows ``c`` counterclockwise around ``b``.
    """
    faces = [list(f) for f in faces]
    owner = {}
    for i, f in enumerate(faces):
        for j in range(len(f)):
            owner.setdefault(frozenset((f[j], f[(j + 1) % len(f)])), []).append(i)
    flip = [None] * len(faces)
    for root in range(len(faces)):
        if flip[root] is not None:
            continue
        flip[root] = False
        queue = deque([root])
        while queue:
            i = queue.popleft()
            f = faces[i][::-1] if flip[i] else faces[i]
            darts = {(f[j], f[(j + 1) % len(f)]) for j in range(len(f))}
            for j in range(len(f)):
                a, b = f[j], f[(j + 1) % len(f)]
                for k in owner[frozenset((a, b))]:
                    if k == i or flip[k] is not None:
                        continue
                    g = faces[k]
                    same = any((g[t], g[(t + 1) % len(g)]) in darts for t in range(len(g)))
                    flip[k] = same
                    queue.append(k)
    succ = [dict() for _ in range(n)]
    for i, f in enumerate(faces):
        f = f[::-1] if flip[i] else f
        m = len(f)
        for j in range(m):
            a, b, c = f[j - 1], f[j], f[(j + 1) % m]
            succ[b][c] = a
    rots = []
    for v in range(n):
        if not succ[v]:
            rots.append([])
            continue
        start = min(succ[v])
        cyc = [start]
        while succ[v][cyc[-1]] != start:
            cyc.append(succ[v][cyc[-1]])
        rots.append(cyc)
    return EmbeddedGraph(rots)


def _path(k):
    return EmbeddedGraph([[u for u in (v - 1, v + 1) if 0 <= u < k] for v in range(k)])


def _cycle(k):
    return EmbeddedGraph([[(v + 1) % k, (v - 1) % k] for v in range(k)])


def _grid(a, b):
    def vid(r, c):
        return r * b + c

    rots = []
    for r in range(a):
        for c in range(b):
            # east, north, west, south with rows growing downward
            nb = [(r, c + 1), (r - 1, c), (r, c - 1), (r + 1, c)]
            rots.append([vid(x, y) for x, y in nb if 0 <= x < a and 0 <= y < b])
    return EmbeddedGraph(rots)


def _prism(k):
    rots = []
    for i in range(k):
        rots.append([(i + 1) % k, k + i, (i - 1) % k])
    for i in range(k):
        rots.append([i, k + (i + 1) % k, k + (i - 1) % k])
    return EmbeddedGraph(rots)


def _icosahedron():
    faces = []
    for i in range(5):
        u, u1 = 1 + i, 1 + (i + 1) % 5
        l, l1 = 6 + i, 6 + (i + 1) % 5
        faces += [(0, u, u1), (u, l, u1), (u1, l, l1), (11, l1, l)]
    return from_faces(12, faces)


def _dodecahedron():
    a = list(range(0, 5))
    b = list(range(5, 15))
    c = list(range(15, 20))
    faces = [a[:]]
    for i in range(5):
        faces.append([a[i], a[(i + 1) % 5], b[(2 * i + 2) % 10], b[2 * i + 1], b[2 * i]])
        faces.append([b[2 * i + 1], b[(2 * i + 2) % 10], b[(2 * i + 3) % 10],
                      c[(i + 1) % 5], c[i]])
    faces.append(c[:])
    return from_faces(20, faces)


def named_graph(name: str) -> EmbeddedGraph:
    """Canonical embedding of a named instance.

    Known names: ``path-k``, ``cycle-k``, ``grid-a-b``, ``prism-k``,
    ``icosahedron``, ``dodecahedron``, ``bowtie``, ``k4``.
    """
    if name == "icosahedron":
        return _icosahedron()
    if name == "dodecahedron":
        return _dodecahedron()
    if name == "bowtie":
        return EmbeddedGraph([[1, 2, 3, 4], [2, 0], [0, 1], [4, 0], [0, 3]])
    if name == "k4":
        return from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
    m = re.fullmatch(r"(path|cycle|prism)-(\d+)", name)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if kind == "path" and k >= 1:
            return _path(k)
        if kind == "cycle" and k >= 3:
            return _cycle(k)
        if kind == "prism" and k >= 3:
            return _prism(k)
    m = re.fullmatch(r"grid-(\d+)-(\d+)", name)
    if m and int(m.group(1)) >= 1 and int(m.group(2)) >= 1:
        return _grid(int(m.group(1)), int(m.group(2)))
    raise UnknownName(name)


@dataclass(frozen=True)
class GenSpec:
    n: int
    seed: int = 0
    strategy: str = "random-capped"
    name: str | None = None


def _random_triangulation(n, rng):
    rot = [[1, 2], [2, 0], [0, 1]]
    faces = [(0, 1, 2), (0, 2, 1)]
    for x in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        for p, s in ((a, b), (b, c), (c, a)):
            # walk q -> p -> s; the face sits just counterclockwise of s at p
            cyc = rot[p]
            cyc.insert(cyc.index(s) + 1, x)
        rot.append([a, b, c])
        faces[i] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
    return rot


def _is_bridge(adj, u, v):
    if adj[u] & adj[v]:
        return False
    seen = {u}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if x == u and y == v:
                continue
            if y == v:
                return False
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return True


def _cap_degrees(rot, max_degree=5):
    adj = [set(c) for c in rot]
    while True:
        over = sorted((v for v in range(len(adj)) if len(adj[v]) > max_degree),
                      key=lambda v: (-len(adj[v]), v))
        if not over:
            break
        for v in over:
            # prefer the neighbor with most excess so one deletion helps twice
            for u in sorted(adj[v], key=lambda u: (-len(adj[u]), u)):
                if not _is_bridge(adj, v, u):
                    adj[v].discard(u)
                    adj[u].discard(v)
                    break
            else:
                continue
            break
        else:
            raise RuntimeError("every edge at the over-full vertices is a bridge")
    return [[u for u in rot[v] if u in adj[v]] for v in range(len(rot))]


def gen_random_delta5(spec: GenSpec) -> EmbeddedGraph:
    """Seeded random connected plane graph with maximum degree <= 5.

    Grows a triangulation by inserting each new vertex into a uniformly
    chosen triangle, then repeatedly removes a non-bridge edge at a vertex
    of largest degree until every degree is at most 5.

    Raises
    ------
    Unsatisfiable
        If ``spec.n < 3``.
    """
    if spec.strategy == "named":
        return named_graph(spec.name)
    if spec.n < 3:
        raise Unsatisfiable(f"need n >= 3, got {spec.n}")
    rng = random.Random(spec.seed)
    return EmbeddedGraph(_cap_degrees(_random_triangulation(spec.n, rng)))


def corpus_spec(seed: int, sizes=CORPUS_SIZES) -> GenSpec:
    """Corpus member for ``seed``: sizes cycle with the seed, starting at seed 1."""
    return GenSpec(sizes[(seed - 1) % len(sizes)], seed)


def corpus(seeds=CORPUS_SEEDS, sizes=CORPUS_SIZES, named=NAMED_CORPUS):
    """Yield ``(label, graph)`` for the named instances then the random ones."""
    for name in named:
        yield name, named_graph(name)
    for s in seeds:
        spec = corpus_spec(s, sizes)
        yield f"random-{spec.n}-{s}", gen_random_delta5(spec)

import math

import pytest

from sqcolor.embed import EmbeddedGraph
from sqcolor.gen import named_graph


def embed_by_coords(points, edges):
    """Straight-line plane graph: rotations sorted by angle around each point.

    ``points`` maps a name to (x, y); returns the graph and name -> id.
    """
    names = list(points)
    ids = {nm: i for i, nm in enumerate(names)}
    nbrs = {nm: [] for nm in names}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    rots = []
    for nm in names:
        x0, y0 = points[nm]
        order = sorted(nbrs[nm], key=lambda u: math.atan2(points[u][1] - y0, points[u][0] - x0))
        rots.append([ids[u] for u in order])
    return EmbeddedGraph(rots), ids


def _polar(deg, r=1.0):
    return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))


@pytest.fixture
def bad_vertex_graph():
    # bad 5-vertex v: four triangles and one 5-face v, v5, a, b, v1
    pts = {"v": (0.0, 0.0)}
    for i, ang in enumerate((300, 10, 90, 170, 240), start=1):
        pts[f"v{i}"] = _polar(ang)
    pts.update({"a": (-0.5, -1.8), "b": (0.5, -1.8),
                "c1": (1.6, -1.2), "c2": (2.0, -0.2), "d1": (-1.6, -1.2), "d2": (-2.0, -0.2)})
    edges = [("v", f"v{i}") for i in range(1, 6)]
    edges += [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5")]
    edges += [("v5", "a"), ("a", "b"), ("b", "v1")]
    edges += [("v1", "c1"), ("v1", "c2"), ("v5", "d1"), ("v5", "d2")]
    return embed_by_coords(pts, edges)


@pytest.fixture
def double_corner_graph():
    # v is a corner of both bad 5-vertices v1 and v5
    pts = {"v": (0.0, 0.0), "v1": (0.5, 1.0), "v5": (-0.5, 1.0), "v2": (1.0, -0.36),
           "v3": (0.0, -1.0), "v4": (-1.0, -0.36), "p": (1.5, 0.8), "q": (1.3, 2.0),
           "r": (0.0, 2.0), "x": (-1.5, 1.6), "y": (-1.5, 0.7), "t": (-1.8, -0.2),
           "s": (1.8, -0.3)}
    edges = [("v", "v1"), ("v", "v2"), ("v", "v3"), ("v", "v4"), ("v", "v5"),
             ("v1", "v5"), ("v1", "p"), ("v1", "q"), ("v1", "r"), ("p", "q"), ("q", "r"),
             ("r", "v5"), ("v5", "x"), ("v5", "y"), ("x", "r"), ("x", "y"),
             ("v4", "v3"), ("v3", "v2"), ("v2", "s"), ("s", "p"), ("y", "t"), ("t", "v4")]
    return embed_by_coords(pts, edges)


@pytest.fixture
def two_triangle_vertex_graph():
    # 5-vertex v with triangles v v3 v4 and v v4 v5, and 3-neighbors v1, v2
    pts = {"v": (0.0, 0.0)}
    for i, ang in enumerate((18, 90, 162, 234, 306), start=1):
        pts[f"v{i}"] = _polar(ang)
    edges = [("v", f"v{i}") for i in range(1, 6)] + [("v3", "v4"), ("v4", "v5")]
    pendants = {"v1": 2, "v2": 2, "v3": 2, "v4": 1, "v5": 2}
    for nm, k in pendants.items():
        base = math.degrees(math.atan2(pts[nm][1], pts[nm][0]))
        for j in range(k):
            p = f"{nm}p{j}"
            pts[p] = _polar(base + (j - (k - 1) / 2) * 20, 2.0)
            edges.append((nm, p))
    return embed_by_coords(pts, edges)


@pytest.fixture
def c5():
    return named_graph("cycle-5")


@pytest.fixture
def p3():
    return named_graph("path-3")


@pytest.fixture
def ico():
    return named_graph("icosahedron")

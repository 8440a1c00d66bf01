import pytest
from hypothesis import given, settings

from sqcolor.embed import (
    EmbeddedGraph,
    add_chord,
    build_from_rotations,
    delete_edge,
    delete_vertex,
    euler_report,
    format_epg,
    parse_epg,
    trace_faces,
)
from sqcolor.exceptions import (
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
from sqcolor.gen import named_graph
from strategies import any_graphs

K3 = {0: [1, 2], 1: [2, 0], 2: [0, 1]}


def face_degrees(G):
    return sorted(f.degree for f in G.faces)


def test_triangle_has_two_3_faces():
    G = build_from_rotations(3, K3)
    assert face_degrees(G) == [3, 3]


def test_path_single_face_of_degree_4():
    G = build_from_rotations(3, {0: [1], 1: [0, 2], 2: [1]})
    assert face_degrees(G) == [4]


@pytest.mark.parametrize("rots, exc", [
    ({0: [1], 1: []}, AsymmetricAdjacency),
    ({0: [1, 1], 1: [0]}, DuplicateNeighbor),
    ({0: [5], 1: []}, IdOutOfRange),
    ({0: [0], 1: []}, SelfLoop),
])
def test_rotation_errors(rots, exc):
    with pytest.raises(exc):
        build_from_rotations(2, rots)


def test_non_planar_rotation_rejected():
    # K4 with one rotation flipped has genus 1
    rots = [list(r) for r in named_graph("k4").rotations]
    rots[0] = rots[0][::-1]
    with pytest.raises(NonPlanarRotation):
        EmbeddedGraph(rots)


def test_k5_cannot_be_embedded():
    rots = [[u for u in range(5) if u != v] for v in range(5)]
    with pytest.raises(NonPlanarRotation):
        EmbeddedGraph(rots)


def test_cycle_and_icosahedron_faces(c5, ico):
    assert face_degrees(c5) == [5, 5]
    assert len(trace_faces(ico)) == 20
    assert all(f.degree == 3 for f in ico.faces)


def test_delete_vertex_triangle():
    M, kept = delete_vertex(build_from_rotations(3, K3), 0)
    assert kept == (1, 2)
    assert M.n_edges == 1 and face_degrees(M) == [2]


def test_delete_vertex_cycle_gives_path(c5):
    M, kept = delete_vertex(c5, 2)
    assert M.n == 4 and M.n_edges == 3 and M.is_connected()
    assert sorted(M.degree(v) for v in range(4)) == [1, 1, 2, 2]


def test_delete_vertex_icosahedron_opens_pentagon(ico):
    v = 0
    ring = set(ico.neighbors(v))
    M, kept = delete_vertex(ico, v)
    assert M.n == 11
    big = [f for f in M.faces if f.degree == 5]
    assert len(big) == 1
    assert {kept[x] for x in big[0].walk} == ring


def test_delete_missing_vertex(c5):
    with pytest.raises(NoSuchVertex):
        delete_vertex(c5, 9)


def test_delete_edge_examples(c5, ico):
    P = delete_edge(build_from_rotations(3, K3), 0, 1)
    assert P.n_edges == 2 and face_degrees(P) == [4]
    assert face_degrees(delete_edge(c5, 0, 1)) == [8]
    M = delete_edge(ico, 0, 1)
    assert len(M.faces) == 19 and face_degrees(M).count(4) == 1
    with pytest.raises(NoSuchEdge):
        delete_edge(c5, 0, 2)


def test_add_chord_c4_both_sides():
    C4 = named_graph("cycle-4")
    for i in range(2):
        M = add_chord(C4, 0, 2, i)
        assert face_degrees(M) == [3, 3, 4]


def test_add_chord_closes_path():
    P4 = named_graph("path-4")
    M = add_chord(P4, 0, 3, P4.faces[0])
    assert face_degrees(M) == [4, 4]


def test_add_chord_c5(c5):
    M = add_chord(c5, 0, 2, 0)
    assert face_degrees(M) == [3, 4, 5]


def test_add_chord_errors(c5):
    with pytest.raises(EdgeExists):
        add_chord(c5, 0, 1, 0)
    G = named_graph("grid-3-3")
    outer = next(f for f in G.faces if f.degree == 8)
    # the centre of the grid is not on the outer face
    with pytest.raises(NotOnSameFace):
        add_chord(G, 0, 4, outer)


def test_euler_reports(ico):
    r = euler_report(build_from_rotations(3, K3))
    assert (r.components, r.n_vertices, r.n_edges, r.n_faces, r.euler_ok) == (1, 3, 3, 2, True)
    r = euler_report(ico)
    assert (r.components, r.n_vertices, r.n_edges, r.n_faces, r.euler_ok) == (1, 12, 30, 20, True)
    two = EmbeddedGraph([[1, 2], [2, 0], [0, 1], [4, 5], [5, 3], [3, 4]])
    r = euler_report(two)
    assert r.components == 2 and r.n_vertices == 6 and r.n_edges == 6 and not r.euler_ok


def test_epg_roundtrip_and_isolated_vertex():
    G = EmbeddedGraph([[1], [0], []])
    text = format_epg(G)
    assert text == "epg 1\nn 3\nv 0: 1\nv 1: 0\nv 2:\n"
    assert parse_epg(text) == G


@pytest.mark.parametrize("text, line", [
    ("epg 2\nn 1\nv 0:\n", 1),
    ("epg 1\nx 1\n", 2),
    ("epg 1\nn 2\nv 0: 1\nv 1: zero\n", 4),
    ("epg 1\nn 2\nv 0: 1\nv 7: 0\n", 4),
    ("epg 1\nn 2\nv 0: 1\nv 0: 1\n", 4),
])
def test_epg_parse_errors_name_line(text, line):
    with pytest.raises(EPGParseError) as info:
        parse_epg(text)
    assert info.value.line_no == line


@settings(max_examples=60, deadline=None)
@given(any_graphs())
def test_faces_partition_darts_and_euler(G):
    darts = [d for f in G.faces for d in f.darts]
    assert len(darts) == len(set(darts)) == 2 * G.n_edges
    assert sum(f.degree for f in G.faces) == 2 * G.n_edges
    assert G.n - G.n_edges + len(G.faces) == 2
    assert parse_epg(format_epg(G)) == G


@settings(max_examples=40, deadline=None)
@given(any_graphs())
def test_deletions_keep_planarity(G):
    v = G.n // 2
    M, kept = delete_vertex(G, v)
    assert M.n == G.n - 1 and v not in kept
    for a, b in M.edges():
        assert G.adjacent(kept[a], kept[b])
    u = G.rotation(v)[0] if G.degree(v) else None
    if u is not None:
        D = delete_edge(G, u, v)
        assert D.n_edges == G.n_edges - 1
        assert len(D.components()) - len(G.components()) in (0, 1)


@settings(max_examples=40, deadline=None)
@given(any_graphs())
def test_reinserting_vertex_restores_faces(G):
    v = G.n - 1  # the last id, so survivors keep their ids
    M, kept = delete_vertex(G, v)
    back = [[kept[u] for u in M.rotation(x)] for x in range(M.n)]
    for u in G.rotation(v):
        # put v back into the slot it occupied at u
        rot = G.rotation(u)
        nxt = rot[(rot.index(v) + 1) % len(rot)]
        cur = back[u]
        cur.insert(cur.index(nxt) if nxt != v and cur else 0, v)
    back.append(list(G.rotation(v)))
    R = EmbeddedGraph(back)
    assert sorted(f.degree for f in R.faces) == sorted(f.degree for f in G.faces)


@settings(max_examples=40, deadline=None)
@given(any_graphs())
def test_add_chord_adds_one_face_and_edge(G):
    for i, f in enumerate(G.faces):
        verts = sorted(f.vertices)
        pairs = [(a, b) for a in verts for b in verts if a < b and not G.adjacent(a, b)]
        if pairs:
            a, b = pairs[0]
            M = add_chord(G, a, b, i)
            assert (M.n_edges, len(M.faces)) == (G.n_edges + 1, len(G.faces) + 1)
            return

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqcolor.embed import EmbeddedGraph, delete_vertex
from sqcolor.exceptions import InvalidChord, IrreducibleGraph, StaleWitness
from sqcolor.gen import named_graph
from sqcolor.metrics import n2_set
from sqcolor.reduce import (
    ReductionWitness,
    apply_reduction,
    check_family_membership,
    classify_forbidden_configs,
    find_edge_reduction,
    find_reduction,
    find_vertex_reduction,
    format_witness,
    iter_reductions,
    parse_witness,
)
from strategies import any_graphs, delta5_graphs

STAR5 = EmbeddedGraph([[1, 2, 3, 4, 5], [0], [0], [0], [0], [0]])


def independent_family_check(G, v, chords):
    """Rebuild M with networkx and test the three membership conditions."""
    H = nx.Graph()
    H.add_nodes_from(x for x in range(G.n) if x != v)
    H.add_edges_from((a, b) for a, b in G.edges() if v not in (a, b))
    H.add_edges_from(chords)
    nbrs = sorted(G.neighbors(v))
    close = all(
        b in nx.single_source_shortest_path_length(H, a, cutoff=2)
        for i, a in enumerate(nbrs) for b in nbrs[i + 1:]
    )
    low = max((d for _, d in H.degree()), default=0) <= 5
    smaller = H.number_of_nodes() + H.number_of_edges() < G.n + G.n_edges
    return close and low and smaller


def test_membership_examples(ico, p3):
    assert check_family_membership(ico, 0, [])
    assert check_family_membership(p3, 1, [(0, 2)])
    assert not check_family_membership(STAR5, 0, [])


def test_membership_rejects_bad_chords(c5, ico):
    with pytest.raises(InvalidChord):
        check_family_membership(c5, 0, [(1, 2)])  # 2 is not a neighbor of 0
    with pytest.raises(InvalidChord):
        check_family_membership(ico, 0, [(1, 2)])  # already an edge
    # 0's neighbours in cyclic order; (a,c) and (b,d) cross around 0
    a, b, c, d = ico.rotation(0)[:4]
    if not ico.adjacent(a, c) and not ico.adjacent(b, d):
        with pytest.raises(InvalidChord):
            check_family_membership(ico, 0, [(a, c), (b, d)])


def test_vertex_reduction_examples(c5, ico):
    w = find_vertex_reduction(ico)
    assert (w.kind, w.vertices, w.chords, w.tag) == ("vertex", (0,), (), "five-triangles")
    w = find_vertex_reduction(c5)
    assert (w.vertices, w.chords, w.tag) == ((0,), ((1, 4),), "degree-2")


def test_edge_reduction_examples(c5, ico):
    w = find_edge_reduction(named_graph("path-2"))
    assert w.kind == "edge" and w.n2 == (1, 1)
    assert find_edge_reduction(c5).n2 == (4, 4)
    assert find_edge_reduction(ico).n2 == (10, 10)


def test_edge_orientation_puts_larger_n2_first():
    # path 0-1-2-3 extended: edge (0,1) has |N2(0)| = 2 < |N2(1)| = 3
    G = named_graph("path-4")
    w = find_edge_reduction(G)
    u, v = w.vertices
    assert len(n2_set(G, u)) >= len(n2_set(G, v))
    assert w.vertices == (1, 0)


def test_find_reduction_kinds(ico):
    assert find_reduction(named_graph("path-2")).kind == "vertex"  # degree-1 vertex goes first
    assert find_reduction(ico).kind == "vertex"


def test_edge_fallback_when_no_vertex_reduction(monkeypatch, c5):
    import sqcolor.reduce as reduce_mod

    monkeypatch.setattr(reduce_mod, "find_vertex_reduction", lambda G, p=17: None)
    w = reduce_mod.find_reduction(c5)
    assert (w.kind, w.vertices) == ("edge", (0, 1))


def test_irreducible_carries_audit(ico):
    with pytest.raises(IrreducibleGraph) as info:
        find_reduction(ico, palette_size=5)
    assert info.value.audit is not None
    assert info.value.audit.total_final == -120


def test_apply_examples(c5, ico):
    M, kept = apply_reduction(c5, find_vertex_reduction(c5))
    assert M.n == 4 and M.n_edges == 4 and kept == (1, 2, 3, 4)
    assert sorted(f.degree for f in M.faces) == [4, 4]
    M, _ = apply_reduction(ico, find_vertex_reduction(ico))
    assert M.n == 11
    K2 = named_graph("path-2")
    M, kept = apply_reduction(K2, ReductionWitness("edge", (0, 1), tag="edge"))
    assert M.n == 2 and M.n_edges == 0 and kept == (0, 1)


def test_stale_witness(c5):
    with pytest.raises(StaleWitness):
        apply_reduction(c5, ReductionWitness("edge", (0, 2)))
    with pytest.raises(StaleWitness):
        apply_reduction(c5, ReductionWitness("vertex", (7,)))
    with pytest.raises(StaleWitness):
        apply_reduction(c5, ReductionWitness("vertex", (0,), ((1, 3),)))
    with pytest.raises(StaleWitness):
        apply_reduction(STAR5, ReductionWitness("vertex", (0,), ()))


@pytest.mark.parametrize("line", [
    "W vertex 3 chords (1,4)(2,5) tag generic-chords",
    "W vertex 0 chords - tag five-triangles",
    "W edge 7 2 tag edge",
])
def test_witness_text_roundtrip(line):
    assert format_witness(parse_witness(line)) == line


@pytest.mark.parametrize("line", ["W vertex x chords - tag t", "W edge 1", "V vertex 0 chords - tag t",
                                  "W vertex 0 chords (1,2,3) tag t"])
def test_witness_parse_errors(line):
    with pytest.raises(ValueError):
        parse_witness(line)


@settings(max_examples=60, deadline=None)
@given(any_graphs())
def test_witness_is_valid_and_shrinks(G):
    w = find_reduction(G)
    if w.kind == "vertex":
        (v,) = w.vertices
        assert len(n2_set(G, v)) <= 16
        assert check_family_membership(G, v, w.chords)
        assert independent_family_check(G, v, w.chords)
    else:
        u, v = w.vertices
        a, b = len(n2_set(G, u)), len(n2_set(G, v))
        assert a >= b and a <= 17 and b <= 16
    M, kept = apply_reduction(G, w)
    assert M.n + M.n_edges < G.n + G.n_edges
    assert M.max_degree <= 5


@settings(max_examples=25, deadline=None)
@given(delta5_graphs(max_n=30))
def test_fast_chain_matches_stepwise_chain(G):
    fast = [s.witness for s in iter_reductions(G)]
    slow = []
    cur, ids = G, tuple(range(G.n))
    while cur.n > 1:
        w = find_reduction(cur)
        slow.append(w.relabel(ids))
        cur, kept = apply_reduction(cur, w)
        ids = tuple(ids[k] for k in kept)
    strip = [(w.kind, w.vertices, w.chords, w.tag) for w in fast]
    assert strip == [(w.kind, w.vertices, w.chords, w.tag) for w in slow]
    assert len(fast) <= G.n + G.n_edges


@settings(max_examples=20, deadline=None)
@given(delta5_graphs(), st.data())
def test_scan_is_deterministic(G, data):
    assert find_reduction(G) == find_reduction(G)


def test_forbidden_examples(c5, ico, two_triangle_vertex_graph):
    ico_cfg = classify_forbidden_configs(ico)
    assert sum(c.rule == "5-vertex-five-triangles" for c in ico_cfg) == 12
    assert any(c.rule == "low-degree" and "degree 2" in c.detail for c in classify_forbidden_configs(c5))
    G, ids = two_triangle_vertex_graph
    hits = [c for c in classify_forbidden_configs(G) if c.vertices[0] == ids["v"]]
    assert any(c.detail == "5-vertex, f3=2, n3=2" for c in hits)


def test_forbidden_bad_vertex_patterns(bad_vertex_graph, double_corner_graph):
    G, ids = bad_vertex_graph
    rules = {c.rule for c in classify_forbidden_configs(G) if c.vertices[0] == ids["v"]}
    assert "bad-5-vertex-small-neighbor" in rules
    G, ids = double_corner_graph
    rules = {c.rule for c in classify_forbidden_configs(G) if c.vertices[0] in (ids["v1"], ids["v5"])}
    assert rules & {"bad-5-vertex-small-neighbor", "bad-5-vertex-bad-corner", "bad-5-vertex-with-4-face"}


def test_every_corpus_graph_has_a_forbidden_configuration():
    from sqcolor.gen import corpus

    for label, G in corpus(seeds=range(1, 121)):
        assert classify_forbidden_configs(G), label

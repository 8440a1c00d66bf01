"""Hypothesis strategies producing plane graphs with maximum degree 5."""

from hypothesis import strategies as st

from sqcolor.gen import GenSpec, gen_random_delta5, named_graph

small_names = st.sampled_from([
    "path-2", "path-3", "path-4", "cycle-3", "cycle-5", "cycle-6", "grid-2-3",
    "grid-3-3", "prism-3", "prism-5", "bowtie", "k4", "icosahedron",
])


@st.composite
def delta5_graphs(draw, min_n=3, max_n=40):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**63 - 1))
    return gen_random_delta5(GenSpec(n, seed))


@st.composite
def any_graphs(draw):
    if draw(st.booleans()):
        return named_graph(draw(small_names))
    return draw(delta5_graphs())

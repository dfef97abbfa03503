import hypothesis
from hypothesis import strategies as st

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def small_graphs(draw, max_n=8):
    from pathpair.graph import Graph

    n = draw(st.integers(1, max_n))
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(all_edges), unique=True)) if all_edges else []
    return Graph(n, chosen)

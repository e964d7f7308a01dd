import itertools

import networkx as nx
import pytest
from hypothesis import strategies as st

from crossings.graph import FamilyId, Graph, build_graph, family_graph


def from_networkx(h) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i + 1 for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def atlas_graphs(max_nodes: int) -> list[Graph]:
    """All non-isomorphic graphs on 1..max_nodes vertices (max_nodes <= 7)."""
    return [from_networkx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_nodes]


def family_catalog() -> dict[str, Graph]:
    specs = [("path", k) for k in range(4, 8)] + [("cycle", k) for k in range(4, 8)] \
        + [("matching", k) for k in range(1, 4)] + [("triangles", k) for k in range(1, 3)] \
        + [("kite", k) for k in range(5, 8)]
    return {f"{t}{k}": family_graph(FamilyId(t, k)) for t, k in specs}


def catalog(max_n: int) -> list[tuple[str, Graph]]:
    """Families plus every non-isomorphic graph on <= 5 vertices, restricted to n <= max_n."""
    items = [(name, g) for name, g in family_catalog().items() if g.n <= max_n]
    items += [(f"atlas{i}", g) for i, g in enumerate(atlas_graphs(5)) if g.n <= max_n]
    return items


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graph_with_permutation(draw, min_n=1, max_n=12):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(range(1, g.n + 1)))
    return g, tuple(perm)


@pytest.fixture(scope="session")
def small_atlas():
    return atlas_graphs(5)

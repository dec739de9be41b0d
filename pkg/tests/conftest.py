import pytest

from lapmatch.graphs import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@pytest.fixture(scope="session")
def atlas():
    """All connected graphs on 1..7 vertices, one per isomorphism class."""
    import networkx as nx

    out = []
    for nxg in nx.graph_atlas_g():
        if nxg.number_of_nodes() >= 1 and nx.is_connected(nxg):
            out.append(Graph(nxg.number_of_nodes(), [tuple(e) for e in nxg.edges()]))
    counts = {}
    for g in out:
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
    return out


@pytest.fixture(scope="session")
def atlas6(atlas):
    subset = [g for g in atlas if g.n <= 6]
    assert len(subset) == 143
    return subset


@pytest.fixture(scope="session")
def lm_cache(atlas):
    """Memoized direct-route polynomials, shared by the heavier suites."""
    from lapmatch.laplacian import lm_direct

    cache = {}

    def get(g: Graph):
        key = (g.n, g.edges)
        if key not in cache:
            cache[key] = lm_direct(g)
        return cache[key]

    return get

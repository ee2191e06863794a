import networkx as nx
import numpy as np
import pytest

from pcube import generators as gen
from pcube.errors import NotPartialCube, SelfLoopError, VertexOutOfRange
from pcube.graph import CONTRACTED, Graph, bfs, contract, is_bipartite, is_connected, max_degree_vertex
from pcube.unionfind import UnionFind


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_from_edge_list():
    g = Graph.from_edge_list(2, [(0, 1)])
    assert (g.n, g.m) == (2, 1)
    k23 = Graph.from_edge_list(5, [(a, b) for a in (0, 1) for b in (2, 3, 4)])
    assert (k23.n, k23.m) == (5, 6)
    with pytest.raises(SelfLoopError):
        Graph.from_edge_list(3, [(0, 0)])
    with pytest.raises(VertexOutOfRange):
        Graph.from_edge_list(3, [(0, 3)])


def test_duplicates_collapse():
    g = Graph.from_edge_list(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2


def test_adjacency_consistent():
    g = gen.random_connected_graph(30, 40, seed=3)
    seen = {}
    for v in range(g.n):
        for w, e in g.adj[v]:
            assert set(g.edges[e]) == {v, w}
            seen[e] = seen.get(e, 0) + 1
    assert all(c == 2 for c in seen.values()) and len(seen) == g.m
    assert g.degrees().sum() == 2 * g.m


def test_bfs_examples():
    assert bfs(gen.path(3), 0).dist == [0, 1, 2]
    q3 = gen.hypercube(3)
    assert bfs(q3, 0).dist == [bin(v).count("1") for v in range(8)]
    two = Graph.from_edge_list(4, [(0, 1), (2, 3)])
    res = bfs(two, 0)
    assert res.reached == [True, True, False, False]
    assert res.dist[2] == -1


@pytest.mark.parametrize("seed", range(5))
def test_bfs_against_networkx(seed):
    g = gen.random_connected_graph(40, 30, seed=seed)
    res = bfs(g, 7)
    expected = nx.single_source_shortest_path_length(to_nx(g), 7)
    assert res.dist == [expected[v] for v in range(g.n)]
    assert res.order[0] == 7 and sorted(res.order) == list(range(g.n))
    for v in res.order[1:]:
        u, w = g.edges[res.parent_edge[v]]
        parent = u if w == v else w
        assert res.dist[v] == res.dist[parent] + 1


def test_bipartite():
    c5 = is_bipartite(gen.cycle(5))
    assert not c5
    walk = c5.odd_cycle
    assert walk[0] == walk[-1] and (len(walk) - 1) % 2 == 1
    c6 = is_bipartite(gen.cycle(6))
    assert c6.coloring == [0, 1, 0, 1, 0, 1]
    k23 = is_bipartite(gen.complete_bipartite(2, 3)).coloring
    assert k23[0] == k23[1] and k23[2] == k23[3] == k23[4] != k23[0]


@pytest.mark.parametrize("seed", range(20))
def test_bipartite_against_networkx(seed):
    g = gen.random_connected_graph(12, 4, seed=seed)
    res = is_bipartite(g)
    assert bool(res) == nx.is_bipartite(to_nx(g))
    if res:
        assert all(res.coloring[u] != res.coloring[v] for u, v in g.edges)
    else:
        walk = res.odd_cycle
        assert (len(walk) - 1) % 2 == 1
        assert all(g.has_edge(a, b) for a, b in zip(walk, walk[1:]))


def test_connected():
    assert is_connected(Graph.from_edge_list(1, []))
    assert not is_connected(Graph.from_edge_list(2, []))
    assert is_connected(gen.hypercube(4))


def test_max_degree_vertex():
    assert max_degree_vertex(gen.star(5)) == 0
    assert max_degree_vertex(gen.path(3)) == 1
    assert max_degree_vertex(gen.cycle(6)) == 0


def test_contract_worked_example(fig_graph):
    # flag the four classes found from vertex 0; the rest survive
    unlabeled = {(1, 6), (5, 7), (6, 8), (8, 9)}
    flags = [tuple(sorted(e)) not in unlabeled for e in fig_graph.edges]
    h, cmap = contract(fig_graph, flags)
    assert (h.n, h.m) == (4, 3)
    assert sorted(h.degrees().tolist()) == [1, 1, 2, 2]
    e16 = fig_graph.edges.index((1, 6))
    e57 = fig_graph.edges.index((5, 7))
    assert cmap.edge_image[e16] == cmap.edge_image[e57]
    assert cmap.is_merged(e16) != cmap.is_merged(e57)
    for e, f in enumerate(flags):
        if f:
            u, v = fig_graph.edges[e]
            assert cmap.edge_image[e] == CONTRACTED
            assert cmap.vertex_image[u] == cmap.vertex_image[v]


def test_contract_identity():
    g = gen.cycle(6)
    h, cmap = contract(g, [False] * g.m)
    assert (h.n, h.m) == (6, 6)
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
    assert sorted(cmap.vertex_image.tolist()) == list(range(6))


def test_contract_triangle():
    tri = gen.cycle(3)
    e01 = tri.edges.index((0, 1))
    h, cmap = contract(tri, [e == e01 for e in range(3)])
    assert (h.n, h.m) == (2, 1)
    with pytest.raises(NotPartialCube) as exc:
        contract(tri, [e != e01 for e in range(3)])
    assert exc.value.reason == "unlabeled-self-loop"


@pytest.mark.parametrize("seed", range(10))
def test_contract_matches_union_find(seed):
    g = gen.random_connected_graph(25, 20, seed=seed)
    rng = np.random.default_rng(seed)
    flags = rng.random(g.m) < 0.3
    uf = UnionFind(g.n)
    for e in np.flatnonzero(flags):
        uf.union(*g.edges[e])
    try:
        h, cmap = contract(g, flags)
    except NotPartialCube:
        assert any(uf.same(*g.edges[e]) for e in np.flatnonzero(~flags))
        return
    for u in range(g.n):
        for v in range(g.n):
            assert (cmap.vertex_image[u] == cmap.vertex_image[v]) == uf.same(u, v)
    expected = {tuple(sorted((uf.find(u), uf.find(v)))) for (u, v), f in zip(g.edges, flags) if not f}
    assert h.m == len(expected)
    for e in np.flatnonzero(~flags):
        a, b = h.edges[cmap.edge_image[e]]
        u, v = g.edges[e]
        assert {a, b} == {cmap.vertex_image[u], cmap.vertex_image[v]}


def test_union_find():
    uf = UnionFind(6)
    uf.union(0, 1)
    uf.union(2, 3)
    uf.union(1, 3)
    assert uf.same(0, 2) and not uf.same(0, 4)
    assert sorted(map(sorted, uf.groups())) == [[0, 1, 2, 3], [4], [5]]

import numpy as np
import pytest

from pcube import generators as gen
from pcube.errors import NotPartialCube
from pcube.graph import Graph, bfs, is_connected
from pcube.labeler import EdgeClassPartition, SemicubeLabeling, label_all
from pcube.oracle import apsp_bfs, hamming_check, is_partial_cube_bruteforce
from pcube.verifier import (
    advance, build_action_table, check_cut_partition, edge_label_differences, euler_tour, extract_tree,
    init_state, verify,
)


def coordinate_labeling(g, values, dim):
    lab = SemicubeLabeling.from_ints(dim, values)
    part = EdgeClassPartition.from_coordinates(edge_label_differences(g, lab), dim)
    return lab, part


def q2_setup():
    g = gen.hypercube(2)
    lab, part = coordinate_labeling(g, range(4), 2)
    return g, lab, build_action_table(g, lab)


def reason(fn, *args):
    with pytest.raises(NotPartialCube) as exc:
        fn(*args)
    return exc.value.reason


def test_check_cut_partition():
    q3 = gen.hypercube(3)
    lab, part = label_all(q3)
    assert sorted(check_cut_partition(q3, lab, part).tolist()) == [0] * 4 + [1] * 4 + [2] * 4
    p3 = gen.path(3)
    same = SemicubeLabeling.from_ints(1, [0, 0, 1])
    assert reason(check_cut_partition, p3, same, EdgeClassPartition.from_coordinates([0, 0], 1)) == "cut"
    extra = SemicubeLabeling.from_ints(3, [0b000, 0b001, 0b011])
    assert reason(check_cut_partition, p3, extra, EdgeClassPartition.from_coordinates([0, 1], 3)) == "cut"


def test_action_table():
    _, _, table = q2_setup()
    assert table.act(0, (0, 1)) == 1
    assert table.act(1, (0, 1)) == 1
    p3 = gen.path(3)
    lab, _ = coordinate_labeling(p3, [0b00, 0b01, 0b11], 2)
    assert build_action_table(p3, lab).act(0, (1, 1)) == 0


def test_duplicate_action_refused():
    g = Graph.from_edge_list(3, [(0, 1), (0, 2)])
    lab = SemicubeLabeling.from_ints(1, [0, 1, 1])
    assert reason(build_action_table, g, lab) == "duplicate-action"


def test_euler_tour():
    assert euler_tour(gen.path(3)) == [0, 1, 2, 1, 0]
    assert euler_tour(Graph.from_edge_list(1, [])) == [0]
    tour = euler_tour(gen.star(4))
    assert len(tour) == 7 and tour[::2] == [0, 0, 0, 0]
    assert sorted(tour[1::2]) == [1, 2, 3]
    g = gen.random_connected_graph(30, 10, seed=4)
    tour = euler_tour(g)
    assert len(tour) == 2 * g.n - 1 and set(tour) == set(range(g.n))
    assert all(g.has_edge(a, b) for a, b in zip(tour, tour[1:]))


def test_init_q2():
    g, lab, table = q2_setup()
    state = init_state(g, lab, table, 0)
    assert state.tokens() == [(0, 0), (1, 0)]
    assert [state.cursor(v) for v in (1, 2, 3)] == [(0, 0), (1, 0), (0, 0)]
    assert sorted(state.members((0, 0))) == [1, 3]
    assert state.list_length == 2


def test_init_single_vertex():
    g = Graph.from_edge_list(1, [])
    lab = SemicubeLabeling.from_ints(0, [0])
    state = init_state(g, lab, build_action_table(g, lab), 0)
    assert state.tokens() == [] and state.total_steps == 0


def test_advance_q2():
    # coordinate 0 is the rightmost bit, so crossing 00 -> 01 retires (0,0)
    g, lab, table = q2_setup()
    state = init_state(g, lab, table, 0)
    advance(state, 1)
    assert state.root == 1
    assert state.tokens() == [(1, 0), (0, 1)]
    assert state.cursor(3) == (1, 0)
    assert state.cursor(0) == (0, 1)
    assert state.cursor(2) == (1, 0)
    advance(state, 0)
    assert set(state.tokens()) == {(0, 0), (1, 0)}
    with pytest.raises(ValueError):
        advance(state, 3)


def test_tree_examples():
    q3 = gen.hypercube(3)
    lab, part = coordinate_labeling(q3, range(8), 3)
    state = init_state(q3, lab, build_action_table(q3, lab), 0)
    tree = extract_tree(state)
    assert len(tree.path_to_root(7)) - 1 == 3
    p5 = gen.path(5)
    lab, _ = label_all(p5)
    tree = extract_tree(init_state(p5, lab, build_action_table(p5, lab), 0))
    assert tree.out_edge == [None, 0, 1, 2, 3]


@pytest.mark.parametrize("seed", range(8))
def test_trees_are_shortest_paths_at_every_root(seed):
    g = gen.permutation_antimatroid(2, 6, seed) if seed % 2 else gen.random_tree(15, seed)
    lab, _ = label_all(g)
    dist = apsp_bfs(g)
    tour = euler_tour(g)
    state = init_state(g, lab, build_action_table(g, lab), tour[0])
    for i, r in enumerate(tour):
        if i:
            advance(state, r)
        tree = extract_tree(state)
        for v in range(g.n):
            path = tree.path_to_root(v)
            assert len(path) - 1 == dist[v, r]
            assert all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
        assert state.list_length == lab.dimension


def test_verify_accepts_q4_and_trees():
    q4 = gen.hypercube(4)
    lab, part = label_all(q4)
    verify(q4, lab, part)
    t = gen.random_tree(80, 1)
    lab, part = label_all(t)
    stats = verify(t, lab, part)
    assert stats.total_steps <= t.n * (3 * t.n - 2)
    assert stats.total_steps == t.n * (t.n - 1) // 2


def test_verify_refuses_k23_synthetic():
    k23 = gen.complete_bipartite(2, 3)
    lab, part = coordinate_labeling(k23, [0b000, 0b000, 0b001, 0b010, 0b100], 3)
    check_cut_partition(k23, lab, part)
    with pytest.raises(NotPartialCube):
        verify(k23, lab, part)


def test_refusal_at_init():
    g = Graph.from_edge_list(9, [(0, 3), (0, 6), (1, 2), (1, 5), (1, 7), (2, 3), (2, 4), (3, 8), (4, 5), (5, 6)])
    lab, part = label_all(g)
    table = build_action_table(g, lab)
    assert reason(init_state, g, lab, table, 0) == "no-acting-token"
    assert not is_partial_cube_bruteforce(g)


def test_refusal_during_advance():
    g = Graph.from_edge_list(8, [(0, 4), (0, 7), (1, 3), (1, 7), (2, 3), (2, 5), (2, 7), (3, 6), (4, 6)])
    lab, part = label_all(g)
    assert reason(verify, g, lab, part) == "search-exhausted"
    assert not is_partial_cube_bruteforce(g)


def test_c6_with_chord_matches_oracle():
    g = gen.perturb(gen.cycle(6), "add-edge", seed=0)
    try:
        lab, part = label_all(g)
        verify(g, lab, part)
        accepted = True
    except NotPartialCube:
        accepted = False
    assert accepted == is_partial_cube_bruteforce(g)


def hypercube_subgraph(d, keep):
    """Induced subgraph of Q_d on ``keep``, with its coordinate labels
    restricted to the coordinates that actually vary."""
    keep = sorted(keep)
    index = {x: i for i, x in enumerate(keep)}
    pairs = [(index[x], index[x ^ (1 << i)]) for x in keep for i in range(d)
             if x ^ (1 << i) in index and x < x ^ (1 << i)]
    g = Graph.from_edge_list(len(keep), pairs)
    varying = [i for i in range(d) if len({x >> i & 1 for x in keep}) == 2]
    values = [sum((x >> c & 1) << j for j, c in enumerate(varying)) for x in keep]
    return g, values, len(varying)


@pytest.mark.parametrize("seed", range(60))
def test_verify_agrees_with_hamming_on_cube_subgraphs(seed):
    # labels inherited from the cube always respect cuts, so the verifier
    # must accept exactly the isometric ones
    rng = np.random.default_rng(seed)
    d = int(rng.integers(3, 6))
    keep = rng.choice(1 << d, size=int(rng.integers(3, (1 << d) + 1)), replace=False).tolist()
    g, values, dim = hypercube_subgraph(d, keep)
    if not is_connected(g):
        return
    lab, part = coordinate_labeling(g, values, dim)
    try:
        verify(g, lab, part)
        accepted = True
    except NotPartialCube:
        accepted = False
    assert accepted == hamming_check(g, lab)


def test_trace_lines():
    lines = []
    g, lab, _ = q2_setup()
    _, part = coordinate_labeling(g, range(4), 2)
    verify(g, lab, part, trace=lines.append)
    assert len(lines) == len(euler_tour(g)) - 1
    assert lines[0].startswith(f"0 -> {euler_tour(g)[1]}:")


def test_bfs_root_distance_matches_hamming_on_accept():
    g = gen.permutation_antimatroid(3, 5, 2)
    lab, part = label_all(g)
    verify(g, lab, part)
    for r in (0, g.n // 2):
        dist = bfs(g, r).dist
        assert dist == [bin(lab.as_ints()[v] ^ lab.as_ints()[r]).count("1") for v in range(g.n)]

"""Graph families for tests and experiments.

Seeded generators draw from ``numpy.random.default_rng(seed)`` (PCG64), so
the same seed always yields the same edge list.
"""

from collections import deque

import numpy as np

from .graph import Graph

MAX_ANTIMATROID_VERTICES = 200_000


def hypercube(d):
    """``Q_d``; vertex ids are the coordinate words."""
    if not 0 <= d <= 20:
        raise ValueError("hypercube dimension must be in 0..20")
    pairs = [(v, v | (1 << i)) for v in range(1 << d) for i in range(d) if not v >> i & 1]
    return Graph.from_edge_list(1 << d, pairs)


def path(n):
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def even_cycle(n):
    if n < 4 or n % 2:
        raise ValueError(f"even_cycle needs an even n >= 4, got {n}")
    return cycle(n)


def cycle(n):
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n):
    """Center 0 joined to leaves ``1..n-1``."""
    if n < 1:
        raise ValueError("star needs at least one vertex")
    return Graph.from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a, b):
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("both sides must be non-empty")
    return Graph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_dyck_word(pairs, rng):
    """Uniform Dyck word with ``pairs`` up-steps (+1) via the cycle lemma."""
    steps = np.array([1] * pairs + [-1] * (pairs + 1), dtype=np.int64)
    rng.shuffle(steps)
    prefix = np.cumsum(steps)
    # the unique good rotation starts just after the first prefix minimum
    start = int(np.argmin(prefix)) + 1
    rotated = np.roll(steps, -start)
    return rotated[:-1]


def tree_from_dyck(word):
    """Rooted ordered tree: each up-step opens a child of the current node."""
    pairs = []
    stack = [0]
    nxt = 1
    for step in word:
        if step > 0:
            pairs.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return Graph.from_edge_list(nxt, pairs)


def random_tree(n, seed=None):
    """Uniformly random rooted ordered tree on ``n`` nodes."""
    if n < 1:
        raise ValueError("tree needs at least one node")
    rng = np.random.default_rng(seed)
    return tree_from_dyck(random_dyck_word(n - 1, rng))


def permutation_antimatroid(k, t, seed=None, max_vertices=MAX_ANTIMATROID_VERTICES):
    """State graph of the antimatroid generated by ``k`` random permutations
    of ``t`` items.

    The feasible sets are the unions of one prefix from each permutation;
    two sets are adjacent when they differ in one item.  Permutations are
    drawn independently, so repeats are possible.
    """
    if k < 1 or t < 1:
        raise ValueError("k and t must be positive")
    rng = np.random.default_rng(seed)
    perms = [rng.permutation(t).tolist() for _ in range(k)]
    return antimatroid_from_permutations(perms, max_vertices)


def antimatroid_from_permutations(perms, max_vertices=MAX_ANTIMATROID_VERTICES):
    t = len(perms[0]) if perms else 0
    ids = {0: 0}
    frontier = deque([(0, (0,) * len(perms))])
    pairs = []
    while frontier:
        mask, pos = frontier.popleft()
        src = ids[mask]
        for i, perm in enumerate(perms):
            if pos[i] == t:
                continue
            grown = mask | (1 << perm[pos[i]])
            if grown in ids:
                pairs.append((src, ids[grown]))
                continue
            if len(ids) >= max_vertices:
                raise ValueError(f"antimatroid exceeds {max_vertices} vertices")
            ids[grown] = len(ids)
            pairs.append((src, ids[grown]))
            frontier.append((grown, _longest_prefixes(perms, grown, pos)))
    return Graph.from_edge_list(len(ids), pairs)


def _longest_prefixes(perms, mask, pos):
    out = []
    for perm, x in zip(perms, pos):
        while x < len(perm) and mask >> perm[x] & 1:
            x += 1
        out.append(x)
    return tuple(out)


def perturb(g, op, seed=None):
    """Delete a random edge or add a random non-edge."""
    rng = np.random.default_rng(seed)
    if op == "delete-edge":
        if g.m == 0:
            raise ValueError("no edge to delete")
        drop = int(rng.integers(g.m))
        return Graph.from_edge_list(g.n, [e for i, e in enumerate(g.edges) if i != drop])
    if op == "add-edge":
        present = {(min(u, v), max(u, v)) for u, v in g.edges}
        absent = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if (u, v) not in present]
        if not absent:
            raise ValueError("graph is complete")
        return Graph.from_edge_list(g.n, g.edges + [absent[int(rng.integers(len(absent)))]])
    raise ValueError(f"unknown perturbation {op!r}")


def random_connected_graph(n, extra_edges, seed=None):
    """Random spanning tree (random attachment) plus ``extra_edges`` random chords."""
    rng = np.random.default_rng(seed)
    pairs = [(int(rng.integers(v)), v) for v in range(1, n)]
    for _ in range(extra_edges):
        if n < 2:
            break
        u, v = rng.choice(n, size=2, replace=False).tolist()
        pairs.append((u, v))
    return Graph.from_edge_list(n, pairs)

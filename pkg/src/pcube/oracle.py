"""Brute-force ground truth straight from Winkler's characterization.

Slow (``O(nm + m^2)``) and deliberately simple; shares no code with the
labeling or verification phases beyond the graph and labeling containers.
"""

from collections import deque
from itertools import combinations

import numpy as np

from .labeler import SemicubeLabeling


def apsp_bfs(g):
    """``(n, n)`` hop distances, ``-1`` where unreachable."""
    nbrs = [[] for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    dist = np.full((g.n, g.n), -1, dtype=np.int64)
    for s in range(g.n):
        row = dist[s]
        row[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in nbrs[v]:
                if row[w] < 0:
                    row[w] = row[v] + 1
                    queue.append(w)
    return dist


def winkler_related(dist, e, f):
    (p, q), (r, s) = e, f
    return dist[p, r] + dist[q, s] != dist[p, s] + dist[q, r]


def relation_classes(g, dist):
    """Connected components of the relation graph on edges, as lists of edge
    ids, plus whether every pair inside a component is itself related."""
    edges = g.edges
    parent = list(range(len(edges)))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in combinations(range(len(edges)), 2):
        if winkler_related(dist, edges[a], edges[b]):
            parent[root(a)] = root(b)
    groups = {}
    for a in range(len(edges)):
        groups.setdefault(root(a), []).append(a)
    classes = sorted(groups.values())
    transitive = all(
        winkler_related(dist, edges[a], edges[b])
        for cls in classes
        for a, b in combinations(cls, 2)
    )
    return classes, transitive


def is_partial_cube_bruteforce(g):
    if g.n == 0:
        return False
    dist = apsp_bfs(g)
    if (dist < 0).any():
        return False
    if any(dist[0, u] == dist[0, v] for u, v in g.edges):
        return False
    _, transitive = relation_classes(g, dist)
    return transitive


def label_bruteforce(g):
    """Semicube labeling: one coordinate per relation class, bit 0 for the
    vertices nearer the first endpoint of the class's first edge."""
    dist = apsp_bfs(g)
    classes, _ = relation_classes(g, dist)
    edges = g.edges
    values = [0] * g.n
    for i, cls in enumerate(classes):
        p, q = edges[cls[0]]
        for v in range(g.n):
            if dist[v, q] < dist[v, p]:
                values[v] |= 1 << i
    return SemicubeLabeling.from_ints(len(classes), values)


def hamming_matrix(lab):
    bits = lab.bit_matrix().astype(np.int64)
    return bits @ (1 - bits).T + (1 - bits) @ bits.T


def hamming_check(g, lab):
    """True iff every pairwise graph distance equals the label Hamming distance."""
    if lab.n != g.n:
        return False
    return bool(np.array_equal(apsp_bfs(g), hamming_matrix(lab)))


def cut_signature(lab):
    """Coordinates as vertex bipartitions, normalized so that labelings equal
    up to coordinate permutation and complement compare equal."""
    bits = lab.bit_matrix()
    sides = set()
    for i in range(lab.dimension):
        col = bits[:, i]
        side = frozenset(np.flatnonzero(col == col[0]).tolist())
        sides.add(side)
    return frozenset(sides)


def same_up_to_symmetry(a, b):
    return a.dimension == b.dimension and cut_signature(a) == cut_signature(b)

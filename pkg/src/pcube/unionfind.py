"""Array-backed union-find with union by rank and path compression.

The compiled ``find``/``union`` work directly on the ``parent``/``rank``
arrays so that the labeling rounds can call them from other kernels; the
:class:`UnionFind` class is the Python-facing handle on the same arrays.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def find(parent, x):
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


@njit(cache=True)
def union(parent, rank, a, b):
    ra = find(parent, a)
    rb = find(parent, b)
    if ra == rb:
        return ra
    if rank[ra] < rank[rb]:
        ra, rb = rb, ra
    parent[rb] = ra
    if rank[ra] == rank[rb]:
        rank[ra] += 1
    return ra


@njit(cache=True)
def find_all(parent):
    out = np.empty(parent.shape[0], np.int64)
    for x in range(parent.shape[0]):
        out[x] = find(parent, x)
    return out


class UnionFind:
    def __init__(self, size):
        self.parent = np.arange(size, dtype=np.int64)
        self.rank = np.zeros(size, dtype=np.int64)

    def __len__(self):
        return self.parent.shape[0]

    def find(self, x):
        return int(find(self.parent, x))

    def union(self, a, b):
        return int(union(self.parent, self.rank, a, b))

    def same(self, a, b):
        return self.find(a) == self.find(b)

    def roots(self):
        """Representative of every element, as an array."""
        return find_all(self.parent)

    def groups(self):
        out = {}
        for x, r in enumerate(self.roots().tolist()):
            out.setdefault(r, []).append(x)
        return list(out.values())

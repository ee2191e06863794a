"""Undirected simple graphs over dense vertex ids, plus traversal helpers
and edge contraction."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from numba import njit

from .errors import NotPartialCube, SelfLoopError, VertexOutOfRange
from .unionfind import find, union

CONTRACTED = -1


class Graph:
    """Undirected simple graph with vertices ``0..n-1`` and edges ``0..m-1``.

    Edge ``e`` joins ``eu[e]`` and ``ev[e]``.  Adjacency lists are ordered by
    edge id.  Instances are not modified after construction.
    """

    def __init__(self, n, eu, ev):
        self.n = int(n)
        self.eu = np.ascontiguousarray(eu, dtype=np.int64)
        self.ev = np.ascontiguousarray(ev, dtype=np.int64)

    @classmethod
    def from_edge_list(cls, n, pairs):
        """Build a graph, collapsing duplicate pairs and rejecting self-loops."""
        seen = set()
        eu, ev = [], []
        for u, v in pairs:
            u, v = int(u), int(v)
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRange(x, n)
            if u == v:
                raise SelfLoopError(u)
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            eu.append(u)
            ev.append(v)
        return cls(n, np.array(eu, dtype=np.int64), np.array(ev, dtype=np.int64))

    @property
    def m(self):
        return self.eu.shape[0]

    @cached_property
    def edges(self):
        return list(zip(self.eu.tolist(), self.ev.tolist()))

    @cached_property
    def adj(self):
        """Per-vertex list of ``(neighbor, edge_id)``."""
        adj = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            adj[v].append((u, e))
        return adj

    @cached_property
    def csr(self):
        """``(ptr, nbr, inc)``: neighbors and incident edge ids of ``v`` are
        ``nbr[ptr[v]:ptr[v+1]]`` and ``inc[ptr[v]:ptr[v+1]]``."""
        return build_csr(self.n, self.eu, self.ev)

    def degrees(self):
        return np.diff(self.csr[0])

    def degree(self, v):
        ptr = self.csr[0]
        return int(ptr[v + 1] - ptr[v])

    def neighbors(self, v):
        return [w for w, _ in self.adj[v]]

    def has_edge(self, u, v):
        return any(w == v for w, _ in self.adj[u])

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@njit(cache=True)
def build_csr(n, eu, ev):
    m = eu.shape[0]
    ptr = np.zeros(n + 1, np.int64)
    for e in range(m):
        ptr[eu[e] + 1] += 1
        ptr[ev[e] + 1] += 1
    for v in range(n):
        ptr[v + 1] += ptr[v]
    fill = ptr[:n].copy()
    nbr = np.empty(2 * m, np.int64)
    inc = np.empty(2 * m, np.int64)
    for e in range(m):
        u = eu[e]
        v = ev[e]
        nbr[fill[u]] = v
        inc[fill[u]] = e
        fill[u] += 1
        nbr[fill[v]] = u
        inc[fill[v]] = e
        fill[v] += 1
    return ptr, nbr, inc


@dataclass(frozen=True)
class BfsResult:
    root: int
    order: list
    dist: list
    parent_edge: list
    reached: list


def bfs(g, root):
    """Breadth-first search from ``root``; unreached vertices keep
    ``dist == -1`` and ``reached == False``."""
    if not 0 <= root < g.n:
        raise VertexOutOfRange(root, g.n)
    dist = [-1] * g.n
    parent_edge = [-1] * g.n
    dist[root] = 0
    order = [root]
    adj = g.adj
    for v in order:
        dv = dist[v] + 1
        for w, e in adj[v]:
            if dist[w] < 0:
                dist[w] = dv
                parent_edge[w] = e
                order.append(w)
    return BfsResult(root, order, dist, parent_edge, [d >= 0 for d in dist])


@dataclass(frozen=True)
class Bipartition:
    """Result of a bipartiteness test.

    Exactly one of ``coloring`` (a 0/1 color per vertex) and ``odd_cycle``
    (a closed walk ``[v0, ..., vk]`` with ``v0 == vk`` and ``k`` odd) is set.
    """

    coloring: list | None = None
    odd_cycle: list | None = None

    def __bool__(self):
        return self.coloring is not None


def is_bipartite(g):
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    adj = g.adj
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return Bipartition(odd_cycle=_odd_cycle(v, w, parent, depth))
    return Bipartition(coloring=color)


def _odd_cycle(v, w, parent, depth):
    # v and w are adjacent with equal BFS depth parity; climb to their common ancestor
    left, right = [v], [w]
    a, b = v, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    # left: v..lca, right: w..lca
    return left + right[-2::-1] + [v]


def is_connected(g):
    if g.n <= 1:
        return True
    return len(bfs(g, 0).order) == g.n


def max_degree_vertex(g):
    """Lowest-numbered vertex of maximum degree."""
    if g.n < 1:
        raise ValueError("empty graph has no vertices")
    return int(np.argmax(g.degrees()))


@dataclass(frozen=True)
class ContractionMap:
    """Correspondence between a graph and its contraction.

    ``vertex_image[v]`` is the contracted vertex containing ``v``;
    ``edge_image[e]`` is the contracted edge representing ``e``, or
    ``CONTRACTED`` for flagged edges.  Parallel images share one contracted
    edge whose surviving original is ``representative[e']``.
    """

    vertex_image: np.ndarray
    edge_image: np.ndarray
    representative: np.ndarray

    def is_merged(self, e):
        img = self.edge_image[e]
        return img != CONTRACTED and self.representative[img] != e


@njit(cache=True)
def contract_arrays(n, eu, ev, flag, parent, rank):
    """Quotient by the flagged edges.

    Returns ``(n2, vertex_image, new_eu, new_ev, edge_image, representative,
    bad)`` where ``bad`` is the first unflagged edge whose endpoints merged
    (``-1`` if none).  ``parent``/``rank`` must be a fresh union-find over
    the ``n`` vertices.
    """
    m = eu.shape[0]
    for e in range(m):
        if flag[e]:
            union(parent, rank, eu[e], ev[e])
    newid = np.full(n, -1, np.int64)
    vimg = np.empty(n, np.int64)
    n2 = 0
    for v in range(n):
        r = find(parent, v)
        if newid[r] < 0:
            newid[r] = n2
            n2 += 1
        vimg[v] = newid[r]

    eimg = np.full(m, CONTRACTED, np.int64)
    keep = np.empty(m, np.int64)
    lo = np.empty(m, np.int64)
    hi = np.empty(m, np.int64)
    k = 0
    for e in range(m):
        if flag[e]:
            continue
        a = vimg[eu[e]]
        b = vimg[ev[e]]
        if a == b:
            return n2, vimg, keep[:0], keep[:0], eimg, keep[:0], e
        if a > b:
            a, b = b, a
        keep[k] = e
        lo[k] = a
        hi[k] = b
        k += 1

    # two stable bucket passes: by the larger endpoint, then by the smaller
    order = _bucket_pass(np.arange(k), hi, n2)
    order = _bucket_pass(order, lo, n2)

    new_eu = np.empty(k, np.int64)
    new_ev = np.empty(k, np.int64)
    rep = np.empty(k, np.int64)
    m2 = 0
    for j in range(k):
        s = order[j]
        if m2 == 0 or lo[s] != new_eu[m2 - 1] or hi[s] != new_ev[m2 - 1]:
            new_eu[m2] = lo[s]
            new_ev[m2] = hi[s]
            rep[m2] = keep[s]
            m2 += 1
        eimg[keep[s]] = m2 - 1
    return n2, vimg, new_eu[:m2], new_ev[:m2], eimg, rep[:m2], -1


@njit(cache=True)
def _bucket_pass(items, key, nbuckets):
    count = np.zeros(nbuckets + 1, np.int64)
    for j in range(items.shape[0]):
        count[key[items[j]] + 1] += 1
    for b in range(nbuckets):
        count[b + 1] += count[b]
    out = np.empty_like(items)
    for j in range(items.shape[0]):
        s = items[j]
        out[count[key[s]]] = s
        count[key[s]] += 1
    return out


def contract(g, contract_edge):
    """Contract every flagged edge and merge parallel images.

    Raises :class:`NotPartialCube` (reason ``"unlabeled-self-loop"``) if an
    unflagged edge would become a self-loop.
    """
    flag = np.asarray(contract_edge, dtype=np.bool_)
    if flag.shape != (g.m,):
        raise ValueError(f"expected {g.m} flags, got {flag.shape}")
    parent = np.arange(g.n, dtype=np.int64)
    rank = np.zeros(g.n, dtype=np.int64)
    n2, vimg, eu, ev, eimg, rep, bad = contract_arrays(g.n, g.eu, g.ev, flag, parent, rank)
    if bad >= 0:
        raise NotPartialCube("unlabeled-self-loop", f"edge {bad} {g.edges[bad]} collapses",
                             edge=int(bad))
    return Graph(n2, eu, ev), ContractionMap(vimg, eimg, rep)

"""Phase I: edge classes and bitvector labels by repeated multi-class BFS
followed by contraction of the labeled edges.

Each round picks a vertex ``p`` of maximum degree ``d`` in the current
(contracted) graph, gives its ``i``-th neighbor the unit vector at ``i``,
and ORs vectors forward along every distance-increasing edge of a BFS from
``p``.  An edge whose endpoint vectors differ in exactly bit ``i`` joins
class ``i`` of that round; equal vectors leave the edge for later rounds;
anything else refutes the input.  Classified edges are then contracted and
parallel survivors merged, and the loop repeats until one vertex remains.

Coordinates are numbered in discovery order: round-major, and within a
round by the position of the neighbor in ``p``'s adjacency list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .bitvec import MANY, BitVector, classify_xor, nwords, scatter_bits
from .errors import NotPartialCube
from .graph import CONTRACTED, build_csr, contract_arrays, is_bipartite, is_connected
from .unionfind import UnionFind, find_all, union


@dataclass(frozen=True)
class SemicubeLabeling:
    """Per-vertex labels of ``dimension`` bits, one ``uint64`` row each.

    Bit ``i`` of a label is 1 when the vertex lies on the 1-side of the cut
    for coordinate ``i``.
    """

    words: np.ndarray
    dimension: int

    @property
    def n(self):
        return self.words.shape[0]

    def label(self, v):
        return BitVector(self.dimension, self.words[v].copy())

    def bit(self, v, i):
        return int((self.words[v, i >> 6] >> np.uint64(i & 63)) & np.uint64(1))

    def as_ints(self):
        raw = self.words.astype("<u8")
        return [int.from_bytes(raw[v].tobytes(), "little") for v in range(self.n)]

    def to_strings(self):
        width = self.dimension
        return [format(x, f"0{width}b") if width else "" for x in self.as_ints()]

    def bit_matrix(self):
        """``(n, dimension)`` 0/1 array."""
        if self.dimension == 0:
            return np.zeros((self.n, 0), dtype=np.uint8)
        raw = self.words.astype("<u8").view(np.uint8).reshape(self.n, -1)
        return np.unpackbits(raw, axis=1, bitorder="little")[:, : self.dimension]

    @classmethod
    def from_ints(cls, dimension, values):
        values = list(values)
        width = nwords(dimension)
        words = np.zeros((len(values), width), dtype=np.uint64)
        for v, x in enumerate(values):
            if x < 0 or x >> dimension:
                raise ValueError(f"label of vertex {v} does not fit in {dimension} bits")
            words[v] = np.frombuffer(x.to_bytes(8 * width, "little"), dtype="<u8")
        return cls(words, dimension)

    @classmethod
    def from_strings(cls, strings):
        strings = [s.strip() for s in strings]
        dims = {len(s) for s in strings}
        if len(dims) > 1:
            raise ValueError(f"labels have differing lengths {sorted(dims)}")
        dim = dims.pop() if dims else 0
        return cls.from_ints(dim, [int(s, 2) if s else 0 for s in strings])


@dataclass
class EdgeClassPartition:
    """Edges of the input graph grouped into classes by a union-find.

    ``class_coordinate`` maps each class representative (a union-find root
    over edge ids) to its label coordinate.
    """

    classes: UnionFind
    class_coordinate: dict
    dimension: int

    @classmethod
    def from_coordinates(cls, edge_coordinate, dimension):
        coords = np.asarray(edge_coordinate, dtype=np.int64)
        uf = UnionFind(coords.shape[0])
        first = {}
        for e, c in enumerate(coords.tolist()):
            if c in first:
                uf.union(first[c], e)
            else:
                first[c] = e
        return cls(uf, {uf.find(e): c for c, e in first.items()}, dimension)

    def coordinate_of(self, e):
        return self.class_coordinate[self.classes.find(e)]

    def edge_coordinates(self):
        roots = self.classes.roots()
        lookup = self.class_coordinate
        return np.array([lookup[r] for r in roots.tolist()], dtype=np.int64)

    def classes_by_coordinate(self):
        out = [[] for _ in range(self.dimension)]
        for e, c in enumerate(self.edge_coordinates().tolist()):
            out[c].append(e)
        return out


@dataclass
class RoundResult:
    """Outcome of one multi-class BFS on a graph.

    ``classes[i]`` holds the edges whose endpoint vectors differ exactly in
    bit ``i``; ``bits`` is the per-vertex word matrix of those vectors.
    """

    root: int
    classes: list
    bits: np.ndarray
    unlabeled_edges: list

    @property
    def d(self):
        return len(self.classes)

    @property
    def vertex_bits(self):
        return [BitVector(self.d, row.copy()) for row in self.bits]


@dataclass
class Phase1Stats:
    round_degrees: list = field(default_factory=list)
    word_ops: int = 0

    @property
    def rounds(self):
        return len(self.round_degrees)

    def passes(self, word_cap=32):
        """BFS passes needed if each pass may carry at most ``word_cap`` classes."""
        return sum(-(-d // word_cap) for d in self.round_degrees)


def edge_bound(n):
    return n * math.log2(n) if n > 1 else 0.0


def precheck(g):
    """Cheap necessary conditions; raises :class:`NotPartialCube`.

    The edge bound is tested first, before any traversal.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if g.m > edge_bound(g.n):
        raise NotPartialCube("edge-bound", f"m={g.m} > n*log2(n)={edge_bound(g.n):.2f}")
    if not is_connected(g):
        raise NotPartialCube("disconnected")
    parts = is_bipartite(g)
    if not parts:
        raise NotPartialCube("odd-cycle", f"odd cycle {parts.odd_cycle}", cycle=parts.odd_cycle)


@njit(cache=True)
def propagate(ptr, nbr, p, width):
    """BFS from ``p``; returns the per-vertex bit rows, distances and the
    number of distance-increasing edge traversals."""
    n = ptr.shape[0] - 1
    bits = np.zeros((n, width), np.uint64)
    dist = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    i = 0
    for k in range(ptr[p], ptr[p + 1]):
        bits[nbr[k], i >> 6] |= np.uint64(1) << np.uint64(i & 63)
        i += 1
    dist[p] = 0
    order[0] = p
    head = 0
    tail = 1
    forward = 0
    while head < tail:
        v = order[head]
        head += 1
        dn = dist[v] + 1
        for k in range(ptr[v], ptr[v + 1]):
            w = nbr[k]
            if dist[w] < 0:
                dist[w] = dn
                order[tail] = w
                tail += 1
            if dist[w] == dn:
                forward += 1
                for j in range(width):
                    bits[w, j] |= bits[v, j]
    return bits, dist, forward


@njit(cache=True)
def classify_edges(eu, ev, bits):
    """Class index per edge (``-1`` when unlabeled); second value is the
    first edge whose vectors differ in several bits, or ``-1``."""
    m = eu.shape[0]
    cls = np.empty(m, np.int64)
    for e in range(m):
        c = classify_xor(bits[eu[e]], bits[ev[e]])
        if c == MANY:
            return cls, e
        cls[e] = c
    return cls, -1


@njit(cache=True)
def _union_round(cls, rep, d, parent, rank):
    anchors = np.full(d, -1, np.int64)
    for e in range(cls.shape[0]):
        c = cls[e]
        if c < 0:
            continue
        if anchors[c] < 0:
            anchors[c] = rep[e]
        else:
            union(parent, rank, anchors[c], rep[e])
    return anchors


@njit(cache=True)
def _union_merged(eimg, rep, new_rep, parent, rank):
    for e in range(eimg.shape[0]):
        img = eimg[e]
        if img != CONTRACTED and rep[e] != new_rep[img]:
            union(parent, rank, new_rep[img], rep[e])


def find_classes_at_vertex(g, p):
    """One round on ``g`` rooted at ``p``; raises on a multi-bit edge."""
    ptr, nbr, inc = g.csr
    d = int(ptr[p + 1] - ptr[p])
    bits, _, _ = propagate(ptr, nbr, p, nwords(d))
    cls, bad = classify_edges(g.eu, g.ev, bits)
    if bad >= 0:
        raise NotPartialCube("multi-bit-edge", f"edge {g.edges[bad]}",
                             edge=int(bad), endpoints=g.edges[bad])
    classes = [[] for _ in range(d)]
    unlabeled = []
    for e, c in enumerate(cls.tolist()):
        (unlabeled if c < 0 else classes[c]).append(e)
    return RoundResult(p, classes, bits, unlabeled)


def label_all(g, stats=None):
    """Label every vertex and partition every edge.

    Returns ``(SemicubeLabeling, EdgeClassPartition)`` or raises
    :class:`NotPartialCube`.  When the input passes, each class is the cut
    between the 0- and 1-side of its coordinate even if ``g`` is not a
    partial cube; the verifier settles that question.  Pass a
    :class:`Phase1Stats` to collect round counts and word-operation totals.
    """
    precheck(g)
    if stats is None:
        stats = Phase1Stats()
    n, m = g.n, g.m
    classes = UnionFind(m)
    anchors = []
    out = np.zeros((n, nwords(max(n - 1, 0)) + 2), dtype=np.uint64)

    nr, eu, ev = n, g.eu, g.ev
    rep = np.arange(m, dtype=np.int64)  # an original edge inside each current edge
    image = np.arange(n, dtype=np.int64)  # original vertex -> current vertex
    budget = n - 1
    offset = 0
    while nr > 1:
        ptr, nbr, _ = build_csr(nr, eu, ev)
        deg = np.diff(ptr)
        p = int(np.argmax(deg))
        d = int(deg[p])
        if d > budget:
            raise NotPartialCube("budget", f"degree {d} exceeds remaining class budget {budget}")
        budget -= d
        width = nwords(d)

        bits, _, forward = propagate(ptr, nbr, p, width)
        cls, bad = classify_edges(eu, ev, bits)
        if bad >= 0:
            e = int(rep[bad])
            raise NotPartialCube("multi-bit-edge", f"edge {g.edges[e]}", edge=e, endpoints=g.edges[e])
        anchors.extend(_union_round(cls, rep, d, classes.parent, classes.rank).tolist())
        scatter_bits(out, bits, image, offset)
        stats.round_degrees.append(d)
        stats.word_ops += (forward + eu.shape[0] + n) * width

        parent = np.arange(nr, dtype=np.int64)
        rank = np.zeros(nr, dtype=np.int64)
        nr, vimg, eu2, ev2, eimg, first, bad = contract_arrays(nr, eu, ev, cls >= 0, parent, rank)
        if bad >= 0:
            e = int(rep[bad])
            raise NotPartialCube("unlabeled-self-loop", f"edge {g.edges[e]}", edge=e)
        new_rep = rep[first]
        _union_merged(eimg, rep, new_rep, classes.parent, classes.rank)
        eu, ev, rep = eu2, ev2, new_rep
        image = vimg[image]
        offset += d

    roots = find_all(classes.parent)
    class_coordinate = {int(roots[a]): c for c, a in enumerate(anchors)}
    labeling = SemicubeLabeling(np.ascontiguousarray(out[:, : nwords(offset)]), offset)
    return labeling, EdgeClassPartition(classes, class_coordinate, offset)


def phase1_stats(stats, word_cap=32):
    """Round count and the equivalent number of ``word_cap``-limited passes."""
    return {"rounds": stats.rounds, "passes": stats.passes(word_cap), "word_ops": stats.word_ops}

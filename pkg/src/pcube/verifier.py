"""Phase II: certify a cut-consistent labeling by all-pairs shortest paths.

A token ``(i, b)`` moves a vertex whose coordinate ``i`` differs from ``b``
across the coordinate-``i`` cut, provided it has a neighbor there.  While
the current root ``r`` walks an Euler tour of a spanning tree, we keep

* ``L``: a linked list holding, per coordinate, the token pointing toward r;
* a cursor per non-root vertex at the first token of ``L`` acting on it;
* for each listed token, the set of vertices whose cursor sits on it.

Moving the root across an edge retires one token, appends its reverse, and
slides the displaced cursors forward.  A cursor that runs off the end of
``L`` proves the labeling is not distance-preserving.  If every position of
the tour is reached, the cursors form a shortest-path tree at every root
whose depths equal Hamming distances, so the labeling is valid.

Tokens are numbered ``2 * i + b``; the reverse of token ``t`` is ``t ^ 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .bitvec import classify_xor
from .errors import NotPartialCube
from .graph import bfs

# state row indices
_NEXT, _PREV, _HEAD = 0, 1, 2  # token rows
_CURSOR, _ANEXT, _APREV, _STEPS = 0, 1, 2, 3  # vertex rows
# counter slots
_LEN, _MAXLEN, _APPENDED, _TOTAL, _RESCANS = 0, 1, 2, 3, 4

OK = -1
NOT_ADJACENT = -2


@dataclass(frozen=True)
class ActionTable:
    """``across[v, i]``: the neighbor of ``v`` on the other side of the
    coordinate-``i`` cut, or ``-1``.

    Only one of the two tokens of a coordinate can act on a given vertex,
    so one column per coordinate encodes the full ``(vertex, token)`` table.
    """

    across: np.ndarray
    words: np.ndarray

    @property
    def dimension(self):
        return self.across.shape[1]

    def act(self, v, token):
        i, b = token
        w = int(self.across[v, i])
        if w < 0:
            return v
        side = int((self.words[v, i >> 6] >> np.uint64(i & 63)) & np.uint64(1))
        return w if side != b else v


@dataclass
class Phase2Stats:
    n: int
    steps: np.ndarray
    max_list_length: int = 0
    tokens_appended: int = 0
    advances: int = 0
    rescans: int = 0

    @property
    def total_steps(self):
        return int(self.steps.sum())

    @property
    def steps_per_vertex(self):
        return self.total_steps / self.n if self.n else 0.0

    @property
    def max_vertex_steps(self):
        return int(self.steps.max()) if self.n else 0


@dataclass(frozen=True)
class OrientedTree:
    root: int
    out_edge: list  # out_edge[v] is the next vertex toward root (None at root)

    def path_to_root(self, v):
        path = [v]
        while path[-1] != self.root:
            path.append(self.out_edge[path[-1]])
        return path


@njit(cache=True)
def _edge_diffs(eu, ev, words):
    out = np.empty(eu.shape[0], np.int64)
    for e in range(eu.shape[0]):
        out[e] = classify_xor(words[eu[e]], words[ev[e]])
    return out


@njit(cache=True)
def _fill_across(n, dim, eu, ev, coord):
    across = np.full((n, dim), -1, np.int32)
    for e in range(eu.shape[0]):
        c = coord[e]
        u = eu[e]
        v = ev[e]
        if across[u, c] >= 0:
            return across, u, c
        across[u, c] = v
        if across[v, c] >= 0:
            return across, v, c
        across[v, c] = u
    return across, -1, -1


@njit(cache=True)
def _bit(words, v, c):
    return np.int64((words[v, c >> 6] >> np.uint64(c & 63)) & np.uint64(1))


@njit(cache=True)
def _acts(words, across, v, t):
    c = t >> 1
    if across[v, c] < 0:
        return False
    return _bit(words, v, c) != (t & 1)


@njit(cache=True)
def _append(tok, sentinel, t):
    last = tok[_PREV, sentinel]
    tok[_NEXT, last] = t
    tok[_PREV, t] = last
    tok[_NEXT, t] = sentinel
    tok[_PREV, sentinel] = t


@njit(cache=True)
def _unlink(tok, t):
    p = tok[_PREV, t]
    q = tok[_NEXT, t]
    tok[_NEXT, p] = q
    tok[_PREV, q] = p
    tok[_NEXT, t] = -1
    tok[_PREV, t] = -1


@njit(cache=True)
def _member_push(tok, vert, t, v):
    head = tok[_HEAD, t]
    vert[_APREV, v] = -1
    vert[_ANEXT, v] = head
    if head >= 0:
        vert[_APREV, head] = v
    tok[_HEAD, t] = v
    vert[_CURSOR, v] = t


@njit(cache=True)
def _member_remove(tok, vert, v):
    t = vert[_CURSOR, v]
    p = vert[_APREV, v]
    q = vert[_ANEXT, v]
    if p >= 0:
        vert[_ANEXT, p] = q
    else:
        tok[_HEAD, t] = q
    if q >= 0:
        vert[_APREV, q] = p
    vert[_CURSOR, v] = -1


@njit(cache=True)
def _scan(words, across, tok, vert, ctr, sentinel, v, start):
    """First token at or after ``start`` acting on ``v``; ``sentinel`` if none."""
    t = start
    while t != sentinel:
        vert[_STEPS, v] += 1
        ctr[_TOTAL] += 1
        if _acts(words, across, v, t):
            return t
        t = tok[_NEXT, t]
    return sentinel


@njit(cache=True)
def _init(words, across, tok, vert, ctr, root):
    n, dim = across.shape
    sentinel = 2 * dim
    for i in range(dim):
        _append(tok, sentinel, 2 * i + _bit(words, root, i))
    ctr[_LEN] = dim
    ctr[_MAXLEN] = dim
    ctr[_APPENDED] = dim
    for v in range(n):
        if v == root:
            continue
        t = _scan(words, across, tok, vert, ctr, sentinel, v, tok[_NEXT, sentinel])
        if t == sentinel:
            return v
        _member_push(tok, vert, t, v)
    return OK


@njit(cache=True)
def _advance(words, across, tok, vert, ctr, r, r2):
    dim = across.shape[1]
    sentinel = 2 * dim
    c = classify_xor(words[r], words[r2])
    if c < 0 or across[r, c] != r2:
        return NOT_ADJACENT
    tau = 2 * c + _bit(words, r2, c)
    back = tau ^ 1

    _append(tok, sentinel, tau)
    ctr[_APPENDED] += 1
    _member_push(tok, vert, tau, r)
    _member_remove(tok, vert, r2)

    v = tok[_HEAD, back]
    tok[_HEAD, back] = -1
    rescans = 0
    while v >= 0:
        following = vert[_ANEXT, v]
        t = _scan(words, across, tok, vert, ctr, sentinel, v, tok[_NEXT, back])
        if t == sentinel:
            return v
        _member_push(tok, vert, t, v)
        rescans += 1
        v = following
    _unlink(tok, back)
    ctr[_RESCANS] = rescans
    return OK


def check_cut_partition(g, lab, part):
    """Check that every class is exactly the cut of its coordinate.

    Returns the per-edge coordinate array; raises :class:`NotPartialCube`
    (reason ``"cut"``) on the first violation.
    """
    if lab.n != g.n:
        raise ValueError(f"labeling has {lab.n} vertices, graph has {g.n}")
    if lab.dimension != part.dimension:
        raise ValueError(f"labeling dimension {lab.dimension} != partition dimension {part.dimension}")
    coords = part.edge_coordinates() if g.m else np.zeros(0, dtype=np.int64)
    diffs = _edge_diffs(g.eu, g.ev, lab.words)
    bad = np.flatnonzero(diffs != coords)
    if bad.size:
        e = int(bad[0])
        raise NotPartialCube("cut", f"edge {g.edges[e]} of class {int(coords[e])} has label difference code {int(diffs[e])}",
                             edge=e, coordinate=int(coords[e]))
    if lab.dimension:
        bits = lab.bit_matrix()
        ones = bits.sum(axis=0)
        empty = np.flatnonzero((ones == 0) | (ones == g.n))
        if empty.size:
            c = int(empty[0])
            raise NotPartialCube("cut", f"coordinate {c} has an empty side", coordinate=c)
    return coords


def edge_label_differences(g, lab):
    """Per-edge classification of the label xor: the single differing
    coordinate, or ``bitvec.ALL_ZERO`` / ``bitvec.MANY``."""
    if lab.n != g.n:
        raise ValueError(f"labeling has {lab.n} vertices, graph has {g.n}")
    return _edge_diffs(g.eu, g.ev, lab.words)


def build_action_table(g, lab, coords=None):
    if coords is None:
        coords = _edge_diffs(g.eu, g.ev, lab.words)
    across, v, c = _fill_across(g.n, lab.dimension, g.eu, g.ev, np.asarray(coords, dtype=np.int64))
    if v >= 0:
        raise NotPartialCube("duplicate-action", f"vertex {v} has two neighbors across coordinate {c}",
                             vertex=int(v), coordinate=int(c))
    return ActionTable(across, lab.words)


def euler_tour(g):
    """Closed walk around the BFS tree from vertex 0 (``2n - 1`` visits)."""
    if g.n == 0:
        return []
    res = bfs(g, 0)
    if len(res.order) != g.n:
        raise ValueError("graph is not connected")
    children = [[] for _ in range(g.n)]
    for v in res.order[1:]:
        u, w = g.edges[res.parent_edge[v]]
        children[u if w == v else w].append(v)
    tour = [0]
    stack = [iter(children[0])]
    path = [0]
    while stack:
        child = next(stack[-1], None)
        if child is None:
            stack.pop()
            path.pop()
            if path:
                tour.append(path[-1])
        else:
            tour.append(child)
            path.append(child)
            stack.append(iter(children[child]))
    return tour


class TraversalState:
    """Token list, cursors and cursor groups for the current root."""

    def __init__(self, table, root):
        n, dim = table.across.shape
        self.table = table
        self.n = n
        self.root = root
        self.tok = np.full((3, 2 * dim + 1), -1, dtype=np.int64)
        sentinel = 2 * dim
        self.tok[_NEXT, sentinel] = sentinel
        self.tok[_PREV, sentinel] = sentinel
        self.vert = np.full((4, n), -1, dtype=np.int64)
        self.vert[_STEPS] = 0
        self.ctr = np.zeros(5, dtype=np.int64)
        self.advances = 0
        self.rescans = 0

    @property
    def sentinel(self):
        return self.tok.shape[1] - 1

    def tokens(self):
        """Listed tokens in list order, as ``(coordinate, bit)`` pairs."""
        out = []
        t = self.tok[_NEXT, self.sentinel]
        while t != self.sentinel:
            out.append((int(t) >> 1, int(t) & 1))
            t = self.tok[_NEXT, t]
        return out

    def cursor(self, v):
        t = int(self.vert[_CURSOR, v])
        return None if t < 0 else (t >> 1, t & 1)

    def members(self, token):
        t = 2 * token[0] + token[1]
        out = []
        v = self.tok[_HEAD, t]
        while v >= 0:
            out.append(int(v))
            v = self.vert[_ANEXT, v]
        return out

    @property
    def steps(self):
        return self.vert[_STEPS]

    @property
    def total_steps(self):
        return int(self.ctr[_TOTAL])

    @property
    def list_length(self):
        return int(self.ctr[_LEN])

    @property
    def max_list_length(self):
        return int(self.ctr[_MAXLEN])

    @property
    def tokens_appended(self):
        return int(self.ctr[_APPENDED])

    def advance(self, r2):
        """Move the root to neighbor ``r2``; returns the number of
        displaced cursors that were rescanned."""
        r = self.root
        status = _advance(self.table.words, self.table.across, self.tok, self.vert, self.ctr, r, r2)
        if status == NOT_ADJACENT:
            raise ValueError(f"{r2} is not adjacent to the root {r}")
        if status != OK:
            raise NotPartialCube("search-exhausted", f"no token acts on vertex {status} at root {r2}",
                                 vertex=int(status), root=r2)
        self.root = r2
        self.advances += 1
        self.rescans += int(self.ctr[_RESCANS])
        return int(self.ctr[_RESCANS])

    def tree(self):
        across = self.table.across
        out = [None] * self.n
        for v in range(self.n):
            t = int(self.vert[_CURSOR, v])
            if v != self.root:
                out[v] = int(across[v, t >> 1])
        return OrientedTree(self.root, out)


def init_state(g, lab, table, root):
    state = TraversalState(table, root)
    bad = _init(lab.words, table.across, state.tok, state.vert, state.ctr, root)
    if bad != OK:
        raise NotPartialCube("no-acting-token", f"no token acts on vertex {bad} at root {root}",
                             vertex=int(bad), root=root)
    return state


def advance(state, r2):
    return state.advance(r2)


def extract_tree(state):
    return state.tree()


def verify(g, lab, part, trace=None):
    """Accept (returning :class:`Phase2Stats`) or raise :class:`NotPartialCube`.

    ``trace``, if given, is called with one text line per root move.
    """
    if g.n == 0:
        raise ValueError("graph has no vertices")
    coords = check_cut_partition(g, lab, part)
    table = build_action_table(g, lab, coords)
    tour = euler_tour(g)
    state = init_state(g, lab, table, tour[0])
    for r2 in tour[1:]:
        r = state.root
        before = state.total_steps
        rescans = state.advance(r2)
        if trace is not None:
            c = int(np.flatnonzero(table.across[r] == r2)[0])
            trace(f"{r} -> {r2}: +({c},{lab.bit(r2, c)}) -({c},{lab.bit(r, c)}) "
                  f"rescans={rescans} steps={state.total_steps - before}")
    return Phase2Stats(
        n=g.n,
        steps=state.steps.copy(),
        max_list_length=state.max_list_length,
        tokens_appended=state.tokens_appended,
        advances=state.advances,
        rescans=state.rescans,
    )

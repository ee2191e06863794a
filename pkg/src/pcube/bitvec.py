"""Fixed-width bitvectors packed into 64-bit words.

The word-level kernels (``or_words``, ``classify_words``, ``classify_xor``)
are compiled with numba and shared by the labeling rounds, which keep one
row of a ``uint64`` matrix per vertex.  :class:`BitVector` is the
single-vector wrapper around the same kernels.

Coordinate ``i`` lives in word ``i // 64`` at bit ``i % 64``.  In the text
rendering coordinate 0 is the rightmost character.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np
from numba import njit

WORD_BITS = 64

# classify_* return codes; non-negative values are bit indices.
ALL_ZERO = -1
MANY = -2

_ONE = np.uint64(1)
_CHUNK_MASK = np.uint64(0xFFFF)


def _lowbit_table():
    table = np.full(1 << 16, -1, dtype=np.int8)
    for i in range(16):
        # every value whose lowest set bit is i
        table[(1 << i)::(1 << (i + 1))] = i
    return table


_LOWBIT16 = _lowbit_table()


def nwords(k):
    """Words needed to hold ``k`` bits."""
    return (k + WORD_BITS - 1) // WORD_BITS


@njit(cache=True)
def lowest_bit(w):
    # w must be nonzero
    for chunk in range(4):
        part = (w >> np.uint64(16 * chunk)) & _CHUNK_MASK
        if part != 0:
            return 16 * chunk + _LOWBIT16[part]
    return -1


@njit(cache=True)
def or_words(dst, src):
    for j in range(dst.shape[0]):
        dst[j] |= src[j]


@njit(cache=True)
def classify_words(words):
    hit = -1
    for j in range(words.shape[0]):
        w = words[j]
        if w != 0:
            if hit >= 0 or (w & (w - _ONE)) != 0:
                return MANY
            hit = j
    if hit < 0:
        return ALL_ZERO
    return hit * 64 + lowest_bit(words[hit])


@njit(cache=True)
def classify_xor(a, b):
    """classify_words(a ^ b) without materializing the difference."""
    hit = -1
    for j in range(a.shape[0]):
        w = a[j] ^ b[j]
        if w != 0:
            if hit >= 0 or (w & (w - _ONE)) != 0:
                return MANY
            hit = j
    if hit < 0:
        return ALL_ZERO
    return hit * 64 + lowest_bit(a[hit] ^ b[hit])


@njit(cache=True)
def classify_rows(mat):
    out = np.empty(mat.shape[0], np.int64)
    for r in range(mat.shape[0]):
        out[r] = classify_words(mat[r])
    return out


@njit(cache=True)
def scatter_bits(out, rows, index, offset):
    """OR ``rows[index[v]]`` into ``out[v]`` starting at bit ``offset``."""
    base = offset >> 6
    shift = offset & 63
    width = rows.shape[1]
    for v in range(out.shape[0]):
        src = index[v]
        for j in range(width):
            w = rows[src, j]
            if w == 0:
                continue
            out[v, base + j] |= w << np.uint64(shift)
            if shift != 0:
                out[v, base + j + 1] |= w >> np.uint64(64 - shift)


class BitKind(enum.Enum):
    ALL_ZERO = "all-zero"
    EXACTLY_ONE = "exactly-one"
    MANY = "many"


class BitClass(NamedTuple):
    kind: BitKind
    index: int | None = None

    @classmethod
    def from_code(cls, code):
        if code == ALL_ZERO:
            return cls(BitKind.ALL_ZERO)
        if code == MANY:
            return cls(BitKind.MANY)
        return cls(BitKind.EXACTLY_ONE, int(code))


class BitVector:
    """A ``k``-bit vector stored in ``ceil(k / 64)`` words.

    Bits at positions ``>= k`` are always zero.  Vectors are treated as
    values; only :func:`or_assign` mutates, and only its destination.
    """

    __slots__ = ("k", "words")

    def __init__(self, k, words=None):
        if k < 0:
            raise ValueError("bit count must be non-negative")
        self.k = k
        if words is None:
            words = np.zeros(nwords(k), dtype=np.uint64)
        else:
            words = np.ascontiguousarray(words, dtype=np.uint64)
            if words.shape != (nwords(k),):
                raise ValueError(f"expected {nwords(k)} words for k={k}, got {words.shape}")
        self.words = words

    @classmethod
    def from_int(cls, k, value):
        if value < 0 or value >> k:
            raise ValueError(f"value does not fit in {k} bits")
        raw = value.to_bytes(8 * nwords(k), "little")
        return cls(k, np.frombuffer(raw, dtype="<u8").astype(np.uint64))

    @classmethod
    def from_string(cls, text):
        """Parse a 0/1 string; the last character is coordinate 0."""
        text = text.strip()
        if text and set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls.from_int(len(text), int(text, 2) if text else 0)

    def __int__(self):
        return int.from_bytes(self.words.astype("<u8").tobytes(), "little")

    def __len__(self):
        return self.k

    def __getitem__(self, i):
        if not 0 <= i < self.k:
            raise IndexError(f"bit {i} out of range for k={self.k}")
        return int((self.words[i >> 6] >> np.uint64(i & 63)) & _ONE)

    def __eq__(self, other):
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.k == other.k and bool(np.array_equal(self.words, other.words))

    __hash__ = None

    def __repr__(self):
        return f"BitVector({self.to_string()!r})"

    def to_string(self):
        return format(int(self), f"0{self.k}b") if self.k else ""

    def copy(self):
        return BitVector(self.k, self.words.copy())

    def popcount(self):
        return int(self).bit_count()


def zero(k):
    return BitVector(k)


def set_bit(v, i):
    """Return a copy of ``v`` with bit ``i`` set."""
    if not 0 <= i < v.k:
        raise IndexError(f"bit {i} out of range for k={v.k}")
    out = v.copy()
    out.words[i >> 6] |= _ONE << np.uint64(i & 63)
    return out


def _check_same_length(a, b):
    if a.k != b.k:
        raise ValueError(f"length mismatch: {a.k} != {b.k}")


def or_assign(dst, src):
    """In-place ``dst |= src``; returns ``dst``."""
    _check_same_length(dst, src)
    or_words(dst.words, src.words)
    return dst


def xor(a, b):
    _check_same_length(a, b)
    return BitVector(a.k, a.words ^ b.words)


def classify(v):
    return BitClass.from_code(classify_words(v.words))


def concat(hi, lo):
    """Concatenate so that ``lo`` keeps coordinates ``0..lo.k-1``."""
    k = hi.k + lo.k
    words = np.zeros(nwords(k) + 1, dtype=np.uint64)
    words[: lo.words.shape[0]] = lo.words
    if hi.k:
        scatter_bits(words.reshape(1, -1), hi.words.reshape(1, -1),
                     np.zeros(1, dtype=np.int64), lo.k)
    return BitVector(k, words[: nwords(k)])

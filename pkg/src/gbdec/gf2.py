"""Dense GF(2) linear algebra: matrices, rank, rowspace membership, syndromes.

Matrices and vectors are immutable wrappers around uint8 numpy arrays.  A
reduced row-echelon form is cached per matrix so repeated rowspace queries
(one per Monte Carlo trial) reuse the same pivots.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class ShapeError(ValueError):
    """Raised when operand dimensions are incompatible."""


def _as_bits(data, ndim: int) -> np.ndarray:
    arr = np.asarray(data, dtype=np.uint8)
    if arr.ndim != ndim:
        raise ShapeError(f"expected {ndim}-dimensional data, got shape {arr.shape}")
    if arr.size == 0:
        raise ShapeError("empty matrices/vectors are not allowed")
    if np.any(arr > 1):
        raise ValueError("entries must be 0 or 1")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


class BitVector:
    """Immutable binary vector."""

    __slots__ = ("bits",)

    def __init__(self, data):
        self.bits = _as_bits(data, 1)

    @property
    def len(self) -> int:
        return self.bits.shape[0]

    def weight(self) -> int:
        return int(self.bits.sum())

    def __len__(self) -> int:
        return self.len

    def __eq__(self, other) -> bool:
        return isinstance(other, BitVector) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash(self.bits.tobytes())

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.len != other.len:
            raise ShapeError(f"length mismatch: {self.len} vs {other.len}")
        return BitVector(self.bits ^ other.bits)

    def __repr__(self) -> str:
        return f"BitVector({self.bits.tolist()})"

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(np.zeros(n, dtype=np.uint8))

    @classmethod
    def unit(cls, n: int, j: int) -> "BitVector":
        bits = np.zeros(n, dtype=np.uint8)
        bits[j] = 1
        return cls(bits)

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "BitVector":
        bits = np.zeros(n, dtype=np.uint8)
        bits[list(support)] = 1
        return cls(bits)


class BitMatrix:
    """Immutable binary matrix with a lazily cached reduced row-echelon form."""

    __slots__ = ("bits", "_rref_cache")

    def __init__(self, data):
        self.bits = _as_bits(data, 2)
        self._rref_cache = None

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    def row(self, i: int) -> BitVector:
        return BitVector(self.bits[i])

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.bits.T)

    def __eq__(self, other) -> bool:
        return isinstance(other, BitMatrix) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        if self.bits.shape != other.bits.shape:
            raise ShapeError("shape mismatch in matrix XOR")
        return BitMatrix(self.bits ^ other.bits)

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        return cls(np.array(rows, dtype=np.uint8))

    def _rref(self):
        """Return (reduced rows, pivot columns); computed once and cached.

        Computing this before sharing the matrix across workers keeps the
        object effectively immutable afterwards.
        """
        if self._rref_cache is None:
            work = self.bits.astype(np.uint8).copy()
            pivots = []
            r = 0
            for c in range(self.cols):
                hit = np.nonzero(work[r:, c])[0]
                if hit.size == 0:
                    continue
                p = r + int(hit[0])
                if p != r:
                    work[[r, p]] = work[[p, r]]
                others = np.nonzero(work[:, c])[0]
                others = others[others != r]
                work[others] ^= work[r]
                pivots.append(c)
                r += 1
                if r == self.rows:
                    break
            self._rref_cache = (work[: len(pivots)].copy(), pivots)
        return self._rref_cache


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) matrix product."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    prod = (a.bits.astype(np.int64) @ b.bits.astype(np.int64)) & 1
    return BitMatrix(prod.astype(np.uint8))


def rank(m: BitMatrix) -> int:
    """GF(2) rank via Gaussian elimination."""
    return len(m._rref()[1])


def in_rowspace(v: BitVector, m: BitMatrix) -> bool:
    """Whether v is a GF(2) linear combination of the rows of m."""
    if v.len != m.cols:
        raise ShapeError(f"vector length {v.len} does not match {m.cols} columns")
    reduced, pivots = m._rref()
    residue = v.bits.copy()
    for i, c in enumerate(pivots):
        if residue[c]:
            residue ^= reduced[i]
    return not residue.any()


def syndrome(e: BitVector, h: BitMatrix) -> BitVector:
    """Syndrome s = e . h^T over GF(2)."""
    if e.len != h.cols:
        raise ShapeError(f"error length {e.len} does not match {h.cols} columns")
    s = (h.bits.astype(np.int64) @ e.bits.astype(np.int64)) & 1
    return BitVector(s.astype(np.uint8))

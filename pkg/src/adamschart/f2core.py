"""Dense linear algebra over the two-element field.

Rows and vectors are stored as Python ints used as bitsets: bit ``j`` is
entry ``j``.  XOR of two ints is vector addition, so elimination runs
word-parallel without any extra machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits >> self.length:
            raise ValueError("bits set beyond length")

    @classmethod
    def from_str(cls, s: str) -> "BitVector":
        """``"110"`` has entries 1, 1, 0 at positions 0, 1, 2."""
        bits = 0
        for j, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise ValueError(f"not a bit: {ch!r}")
        return cls(len(s), bits)

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "BitVector":
        bits = 0
        for j, e in enumerate(entries):
            if e & 1:
                bits |= 1 << j
        return cls(len(entries), bits)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __len__(self) -> int:
        return self.length

    def __add__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def __str__(self) -> str:
        return "".join(str(b) for b in self.to_list())


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Iterable, cols: Optional[int] = None) -> "BitMatrix":
        """Build from bit strings, 0/1 lists or BitVectors."""
        data = []
        width = cols
        for r in rows:
            if isinstance(r, str):
                v = BitVector.from_str(r)
            elif isinstance(r, BitVector):
                v = r
            else:
                v = BitVector.from_list(r)
            if width is None:
                width = v.length
            elif v.length != width:
                raise ValueError("ragged rows")
            data.append(v.bits)
        return cls(len(data), width or 0, tuple(data))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "BitMatrix":
        """Matrix whose column ``j`` is the bitset ``columns[j]``."""
        data = [0] * nrows
        for j, col in enumerate(columns):
            bit = 1 << j
            while col:
                low = col & -col
                data[low.bit_length() - 1] |= bit
                col ^= low
        return cls(nrows, len(columns), tuple(data))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def column_bits(self, j: int) -> int:
        out = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                out |= 1 << i
        return out

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_columns(self.data, self.cols)

    def mul_vec(self, v: BitVector) -> BitVector:
        if v.length != self.cols:
            raise ValueError("dimension mismatch")
        out = 0
        for i, r in enumerate(self.data):
            if bin(r & v.bits).count("1") & 1:
                out |= 1 << i
        return BitVector(self.rows, out)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        data = []
        for r in self.data:
            acc = 0
            while r:
                low = r & -r
                acc ^= other.data[low.bit_length() - 1]
                r ^= low
            data.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(data))

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.rows))


def _rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; pivot of each row is its lowest set column."""
    work = [r for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        bit = 1 << col
        found = None
        for r in range(top, len(work)):
            if work[r] & bit:
                found = r
                break
        if found is None:
            continue
        work[top], work[found] = work[found], work[top]
        prow = work[top]
        for r in range(len(work)):
            if r != top and work[r] & bit:
                work[r] ^= prow
        pivots.append(col)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


def rank(m: BitMatrix) -> int:
    return len(_rref(m.data, m.cols)[1])


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of {v : Mv = 0}, one vector per free column in ascending order."""
    reduced, pivots = _rref(m.data, m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(reduced, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(BitVector(m.cols, v))
    return basis


def solve(m: BitMatrix, b: BitVector) -> Optional[BitVector]:
    """Some x with Mx = b, or None when b is not in the column space.

    Raises ValueError when ``b`` has the wrong length.
    """
    if b.length != m.rows:
        raise ValueError(f"right-hand side has length {b.length}, expected {m.rows}")
    # eliminate on [M | b] with b in bit position m.cols
    aug = [r | (((b.bits >> i) & 1) << m.cols) for i, r in enumerate(m.data)]
    reduced, pivots = _rref(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = 0
    for row, p in zip(reduced, pivots):
        if (row >> m.cols) & 1:
            x |= 1 << p
    return BitVector(m.cols, x)


def in_image(m: BitMatrix, b: BitVector) -> bool:
    return solve(m, b) is not None


class Echelon:
    """Incrementally grown row-echelon basis of a subspace of F_2^n.

    Used where a span is built one vector at a time (resolution images,
    relation submodules).  Each stored row has a distinct pivot, its lowest
    set bit, and no other stored row has that bit set.
    """

    def __init__(self):
        self._rows: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, v: int) -> int:
        # rows are fully reduced, so each pivot bit of v is cleared exactly once
        out = v
        bits = v
        while bits:
            low = bits & -bits
            row = self._rows.get(low)
            if row is not None:
                out ^= row
            bits ^= low
        return out

    def add(self, v: int) -> bool:
        """Insert v; return False if it was already in the span."""
        v = self.reduce(v)
        if not v:
            return False
        low = v & -v
        for key, row in self._rows.items():
            if row & low:
                self._rows[key] = row ^ v
        self._rows[low] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def rows(self) -> list[int]:
        return [self._rows[k] for k in sorted(self._rows)]

"""Bit-packed linear algebra over GF(2).

Matrices are stored as one Python int per row; bit j of a row int is the
entry in column j (column 0 = least significant bit).  All values are
immutable, so every operation returns a new matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadCharacterError,
    CapExceededError,
    EmptyInputError,
    IndexOutOfRangeError,
    LengthMismatchError,
    RaggedRowsError,
    ZeroCodeError,
)

# Enumerating 2**rank codewords beyond this is refused without an override.
RANK_CAP = 40


@dataclass(frozen=True)
class BinaryMatrix:
    """A k x n matrix over GF(2) with int-bitmask rows."""

    k: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1 or self.k != len(self.rows):
            raise ValueError("row count must be >= 1 and match rows")
        if self.n < 0:
            raise ValueError("column count must be >= 0")
        mask = (1 << self.n) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_rows(cls, bit_rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        """Build from row sequences of 0/1 entries (leftmost entry = column 0)."""
        if not bit_rows:
            raise ValueError("need at least one row")
        n = len(bit_rows[0])
        ints = []
        for row in bit_rows:
            if len(row) != n:
                raise RaggedRowsError("rows have unequal lengths")
            acc = 0
            for j, b in enumerate(row):
                if b not in (0, 1):
                    raise BadCharacterError(f"entry {b!r} is not a bit")
                acc |= b << j
            ints.append(acc)
        return cls(len(ints), n, tuple(ints))

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> tuple[int, ...]:
        """Column j as a bit tuple, top row first."""
        return tuple((r >> j) & 1 for r in self.rows)

    def row_bits(self, i: int) -> tuple[int, ...]:
        """Row i as a bit tuple, column 0 first."""
        return tuple((self.rows[i] >> j) & 1 for j in range(self.n))

    def to_text(self) -> str:
        """Matrix text form: one row of 0/1 characters per line."""
        return "\n".join(
            "".join(str((r >> j) & 1) for j in range(self.n)) for r in self.rows
        )

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    def delete_row(self, i: int) -> "BinaryMatrix":
        rows = self.rows[:i] + self.rows[i + 1 :]
        return BinaryMatrix(self.k - 1, self.n, rows)

    def __str__(self) -> str:
        return self.to_text()


class LinearCode:
    """A binary linear code given by a generator matrix, with cached params."""

    def __init__(self, gen: BinaryMatrix):
        self.gen = gen

    @cached_property
    def rank(self) -> int:
        return rank(self.gen)

    @cached_property
    def dmin(self) -> int:
        return min_distance(self.gen)

    @property
    def n(self) -> int:
        return self.gen.n


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse matrix text: 0/1 rows, optional whitespace, '#' comments.

    Blank lines are skipped; LF and CRLF both accepted.
    """
    rows: list[int] = []
    width = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0]
        bits = []
        for ch in line:
            if ch in "01":
                bits.append(ord(ch) - ord("0"))
            elif ch in " \t\r":
                continue
            else:
                raise BadCharacterError(f"unexpected character {ch!r} in matrix text")
        if not bits:
            continue
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise RaggedRowsError(
                f"row {len(rows) + 1} has {len(bits)} bits, expected {width}"
            )
        acc = 0
        for j, b in enumerate(bits):
            acc |= b << j
        rows.append(acc)
    if width is None:
        raise EmptyInputError("no matrix rows in input")
    return BinaryMatrix(len(rows), width, tuple(rows))


def row_basis(m: BinaryMatrix) -> list[int]:
    """An echelon basis of the row space (bit rows, distinct leading bits)."""
    pivots: dict[int, int] = {}
    for r in m.rows:
        v = r
        while v:
            p = v.bit_length() - 1
            if p in pivots:
                v ^= pivots[p]
            else:
                pivots[p] = v
                break
    return [pivots[p] for p in sorted(pivots, reverse=True)]


def rank(m: BinaryMatrix) -> int:
    """GF(2) row rank."""
    return len(row_basis(m))


def inner_product(u: Sequence[int], v: Sequence[int]) -> int:
    """Ordinary inner product of two bit vectors, mod 2."""
    if len(u) != len(v):
        raise LengthMismatchError(f"lengths {len(u)} and {len(v)} differ")
    return sum(a & b for a, b in zip(u, v)) & 1


def _row_ip(a: int, b: int) -> int:
    """Inner product of two bit rows already packed as ints."""
    return (a & b).bit_count() & 1


def gram(m: BinaryMatrix) -> BinaryMatrix:
    """The k x k matrix of pairwise row inner products mod 2."""
    out = []
    for i in range(m.k):
        acc = 0
        for j in range(m.k):
            acc |= _row_ip(m.rows[i], m.rows[j]) << j
        out.append(acc)
    return BinaryMatrix(m.k, m.k, tuple(out))


def is_self_orthogonal(m: BinaryMatrix) -> bool:
    """True iff the Gram matrix is zero (the row space is in its dual)."""
    return gram(m).is_zero()


def _gray_codewords(basis: Sequence[int]) -> Iterable[int]:
    """Yield the 2**len(basis) - 1 nonzero row-space elements, one XOR each."""
    cw = 0
    for t in range(1, 1 << len(basis)):
        cw ^= basis[(t & -t).bit_length() - 1]
        yield cw


def min_distance(m: BinaryMatrix, allow_large: bool = False) -> int:
    """Minimum weight over the nonzero row space.

    Rank-deficient input is fine: enumeration runs over a row-space basis,
    so each codeword is visited exactly once.
    """
    basis = row_basis(m)
    if not basis:
        raise ZeroCodeError("the zero code has no minimum distance")
    if len(basis) > RANK_CAP and not allow_large:
        raise CapExceededError(
            f"rank {len(basis)} > {RANK_CAP}; pass allow_large=True to force"
        )
    return min(cw.bit_count() for cw in _gray_codewords(basis))


def weight_distribution(m: BinaryMatrix, allow_large: bool = False) -> dict[int, int]:
    """Map weight -> number of codewords, over all 2**rank codewords."""
    basis = row_basis(m)
    if len(basis) > RANK_CAP and not allow_large:
        raise CapExceededError(
            f"rank {len(basis)} > {RANK_CAP}; pass allow_large=True to force"
        )
    counts: dict[int, int] = {0: 1}
    for cw in _gray_codewords(basis):
        w = cw.bit_count()
        counts[w] = counts.get(w, 0) + 1
    return counts


def h_column(k: int, i: int) -> tuple[int, ...]:
    """The length-k binary column for index i, most significant bit on top.

    Index 1 is the column (0, ..., 0, 1).
    """
    if not 1 <= i <= (1 << k) - 1:
        raise IndexOutOfRangeError(f"index {i} outside 1..{(1 << k) - 1}")
    return tuple((i >> (k - 1 - pos)) & 1 for pos in range(k))


def simplex_matrix(k: int) -> BinaryMatrix:
    """The k x (2**k - 1) matrix whose column i is h_column(k, i)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ncols = (1 << k) - 1
    rows = []
    for pos in range(k):
        acc = 0
        shift = k - 1 - pos
        for i in range(1, ncols + 1):
            acc |= ((i >> shift) & 1) << (i - 1)
        rows.append(acc)
    return BinaryMatrix(k, ncols, tuple(rows))


def horizontal_join(
    m: BinaryMatrix, cols: Sequence[Sequence[int]]
) -> BinaryMatrix:
    """Append columns (top-first bit tuples) on the right, in order."""
    for c in cols:
        if len(c) != m.k:
            raise LengthMismatchError(
                f"column of length {len(c)} cannot join a {m.k}-row matrix"
            )
    rows = list(m.rows)
    for offset, c in enumerate(cols):
        for i, b in enumerate(c):
            if b:
                rows[i] |= 1 << (m.n + offset)
    return BinaryMatrix(m.k, m.n + len(cols), tuple(rows))


def vertical_stack(rows_bits: Sequence[int], n: int) -> BinaryMatrix:
    """Matrix from bit rows already packed as ints."""
    return BinaryMatrix(len(rows_bits), n, tuple(rows_bits))


def random_matrix(rng, k: int, n: int) -> BinaryMatrix:
    """Uniform random k x n matrix from a seeded random.Random."""
    return BinaryMatrix(k, n, tuple(rng.getrandbits(n) if n else 0 for _ in range(k)))


def random_full_rank_matrix(rng, k: int, n: int) -> BinaryMatrix:
    """Random k x n matrix of rank k (rejection sampling; needs n >= k)."""
    if n < k:
        raise ValueError("full rank needs n >= k")
    while True:
        m = random_matrix(rng, k, n)
        if rank(m) == k:
            return m


def naive_min_distance(m: BinaryMatrix) -> int:
    """Reference minimum distance: all nonzero row combinations, dedup'd.

    Exists as an independent check for the Gray-code path; quadratic in the
    number of combinations, so only for small matrices.
    """
    seen = set()
    for picks in itertools.product((0, 1), repeat=m.k):
        cw = 0
        for b, r in zip(picks, m.rows):
            if b:
                cw ^= r
        seen.add(cw)
    seen.discard(0)
    if not seen:
        raise ZeroCodeError("the zero code has no minimum distance")
    return min(c.bit_count() for c in seen)

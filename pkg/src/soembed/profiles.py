"""Column-multiplicity characterizations of self-orthogonality.

A matrix's column profile counts how many of its columns equal each of the
2**k - 1 nonzero binary columns.  Self-orthogonality is decidable from the
profile alone: in general as evenness of all pairwise column-intersection
counts, and in dimensions 2..4 as parity-constancy conditions on the
multiplicities (dimension 4 uses the fixed index-class tables).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRangeError, WrongDimensionError
from .gf2 import BinaryMatrix, _row_ip, gram
from .tables import CLASS7_MASKS, CLASS8_MASKS, DIM4_TABLES, Dim4Tables
from .tables import verify_sigma_symmetry  # noqa: F401  (re-exported API)


@dataclass(frozen=True)
class ColumnProfile:
    """Multiplicities of the nonzero columns, plus the zero-column count.

    ell[i - 1] is the multiplicity of column index i; zero columns are
    tracked separately and never enter any parity condition.
    """

    k: int
    ell: tuple[int, ...]
    zero_count: int

    def __post_init__(self):
        if len(self.ell) != (1 << self.k) - 1:
            raise ValueError("profile length must be 2**k - 1")
        if self.zero_count < 0 or any(c < 0 for c in self.ell):
            raise ValueError("multiplicities must be nonnegative")

    @property
    def n(self) -> int:
        return self.zero_count + sum(self.ell)

    def count(self, i: int) -> int:
        """Multiplicity of column index i (0 gives the zero-column count)."""
        if i == 0:
            return self.zero_count
        return self.ell[i - 1]

    def parity_mask(self) -> int:
        """Bit i set iff ell_i is odd."""
        acc = 0
        for i, c in enumerate(self.ell, start=1):
            if c & 1:
                acc |= 1 << i
        return acc


@dataclass(frozen=True)
class ParitySets:
    """Indices with even (J0) and odd (J1) column multiplicity."""

    j0: frozenset[int]
    j1: frozenset[int]


def column_index(col: tuple[int, ...] | list[int]) -> int:
    """Integer index of a binary column; top entry is the most significant bit.

    The zero column maps to 0; otherwise the result i satisfies
    col == h_column(k, i).
    """
    acc = 0
    for b in col:
        acc = (acc << 1) | (b & 1)
    return acc


def column_profile(m: BinaryMatrix) -> ColumnProfile:
    """Count each nonzero column pattern of m; zero columns counted apart."""
    counts = [0] * (1 << m.k)
    shifts = [m.k - 1 - pos for pos in range(m.k)]
    for j in range(m.n):
        idx = 0
        for pos in range(m.k):
            idx |= ((m.rows[pos] >> j) & 1) << shifts[pos]
        counts[idx] += 1
    return ColumnProfile(m.k, tuple(counts[1:]), counts[0])


_PAIR_MASK_CACHE: dict[tuple[int, int, int], int] = {}


def _pair_mask(k: int, j: int, j2: int) -> int:
    """Mask over indices 1 .. 2**k - 1 whose bits j-1 and j2-1 are both set."""
    key = (k, j, j2)
    cached = _PAIR_MASK_CACHE.get(key)
    if cached is None:
        both = (1 << (j - 1)) | (1 << (j2 - 1))
        cached = sum(1 << i for i in range(1, 1 << k) if i & both == both)
        _PAIR_MASK_CACHE[key] = cached
    return cached


def intersection_parity(m: BinaryMatrix, j: int, j2: int) -> int:
    """Parity of the number of columns with 1s in both bit positions j, j2.

    Positions count from the bottom of a column (j = 1 is the last row).
    Computed both from the profile and as a row inner product; the two
    always agree, and disagreement would mean corrupted state.
    """
    if not (1 <= j <= j2 <= m.k):
        raise IndexOutOfRangeError(f"need 1 <= j <= j2 <= {m.k}")
    from_rows = _row_ip(m.rows[m.k - j], m.rows[m.k - j2])
    prof = column_profile(m)
    total = sum(
        prof.count(i)
        for i in range(1, 1 << m.k)
        if (1 << i) & _pair_mask(m.k, j, j2)
    )
    if (total & 1) != from_rows:
        raise AssertionError("profile and row inner product disagree")
    return from_rows


def is_so_profile(m: BinaryMatrix) -> bool:
    """Self-orthogonality via column statistics, any dimension.

    Equivalent to gram(m) == 0, but decided from the column profile alone:
    every pair of bit positions (including a position with itself) must be
    jointly set in an even number of columns.
    """
    odd_mask = column_profile(m).parity_mask()
    for j in range(1, m.k + 1):
        for j2 in range(j, m.k + 1):
            if (odd_mask & _pair_mask(m.k, j, j2)).bit_count() & 1:
                return False
    return True


def _require_dim(p: ColumnProfile, k: int) -> None:
    if p.k != k:
        raise WrongDimensionError(f"profile has dimension {p.k}, need {k}")


def is_so_dim2(p: ColumnProfile) -> bool:
    """Dimension-2 test: all three multiplicities even."""
    _require_dim(p, 2)
    return all(c % 2 == 0 for c in p.ell)


def is_so_dim3(p: ColumnProfile) -> bool:
    """Dimension-3 test: the seven multiplicities share one parity."""
    _require_dim(p, 3)
    first = p.ell[0] & 1
    return all((c & 1) == first for c in p.ell)


def is_so_dim4(p: ColumnProfile) -> bool:
    """Dimension-4 test: some split has parity-constant multiplicities on
    both of its index classes."""
    _require_dim(p, 4)
    odd_mask = p.parity_mask()
    for s in range(15):
        a = odd_mask & CLASS7_MASKS[s]
        if a != 0 and a != CLASS7_MASKS[s]:
            continue
        b = odd_mask & CLASS8_MASKS[s]
        if b == 0 or b == CLASS8_MASKS[s]:
            return True
    return False


def is_so_dim_check(p: ColumnProfile) -> bool:
    """Dispatch to the closed-form test for k = 2, 3, 4."""
    if p.k == 2:
        return is_so_dim2(p)
    if p.k == 3:
        return is_so_dim3(p)
    if p.k == 4:
        return is_so_dim4(p)
    raise WrongDimensionError(f"no closed-form test for dimension {p.k}")


def parity_sets(p: ColumnProfile) -> ParitySets:
    """Split indices 1 .. 2**k - 1 by multiplicity parity."""
    j1 = frozenset(i for i in range(1, (1 << p.k)) if p.count(i) & 1)
    j0 = frozenset(range(1, (1 << p.k))) - j1
    return ParitySets(j0=j0, j1=j1)


def so_verdicts(m: BinaryMatrix) -> dict[str, bool]:
    """All applicable self-orthogonality verdicts for a matrix."""
    out = {
        "gram_zero": gram(m).is_zero(),
        "column_test": is_so_profile(m),
    }
    if 2 <= m.k <= 4:
        out[f"dim{m.k}_test"] = is_so_dim_check(column_profile(m))
    return out


__all__ = [
    "ColumnProfile",
    "ParitySets",
    "Dim4Tables",
    "DIM4_TABLES",
    "column_index",
    "column_profile",
    "intersection_parity",
    "is_so_profile",
    "is_so_dim2",
    "is_so_dim3",
    "is_so_dim4",
    "is_so_dim_check",
    "parity_sets",
    "so_verdicts",
    "verify_sigma_symmetry",
]

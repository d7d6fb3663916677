"""Optimal minimum distances for dimensions 1..5, in closed form.

d_opt(n, k) gives the best minimum distance of any [n, k] binary linear
code; dso_opt(n, k) the best over self-orthogonal codes.  Both are exact
everywhere they are known; the one genuinely open strip (dimension 5,
lengths in the seven bad residue classes mod 31 past the classified range)
is reported with status "conjectured" and never silently mixed in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NoSOCodeError

STATUS_EXACT = "exact"
STATUS_UPPER_BOUND = "upper_bound"
STATUS_CONJECTURED = "conjectured"
STATUS_WITNESS = "witness"

_STATUSES = frozenset(
    (STATUS_EXACT, STATUS_UPPER_BOUND, STATUS_CONJECTURED, STATUS_WITNESS)
)


@dataclass(frozen=True)
class DistanceValue:
    """A distance together with how firmly it is known and what produced it."""

    value: int
    status: str
    source: str

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("distance must be nonnegative")
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass(frozen=True)
class ResidueSets:
    """Residue bookkeeping behind the dimension-4 and -5 formulas.

    The dimension-5 linear sets adjust a pure residue family by the four
    individual integers 8, 9, 12, 13 (not by their residue classes).
    """

    dim3_pen1_mod7: frozenset[int]
    dim4_pen1_mod15: frozenset[int]
    dim2_so_pen1_mod6: frozenset[int]
    dim2_so_pen2_mod6: frozenset[int]
    dim3_so_pen1_mod7: frozenset[int]
    dim3_so_pen2_mod7: frozenset[int]
    dim4_so_pen1_mod15: frozenset[int]
    dim4_so_pen2_mod15: frozenset[int]
    e1_mod31: frozenset[int]
    e2_mod31: frozenset[int]
    lin5_extra_pen1: frozenset[int]
    lin5_moved_to_pen2: frozenset[int]
    so5_pen1_mod31: frozenset[int]
    so5_pen2_mod31: frozenset[int]
    so5_extra_pen2: frozenset[int]
    so5_open_mod31: frozenset[int]

    def in_lin5_pen1(self, n: int) -> bool:
        if n in self.lin5_extra_pen1:
            return True
        if n in self.lin5_moved_to_pen2:
            return False
        return n % 31 in self.e1_mod31

    def in_lin5_pen2(self, n: int) -> bool:
        return n in self.lin5_moved_to_pen2 or n % 31 in self.e2_mod31

    def in_so5_open(self, n: int) -> bool:
        return n % 31 in self.so5_open_mod31


RESIDUES = ResidueSets(
    dim3_pen1_mod7=frozenset({2}),
    dim4_pen1_mod15=frozenset({2, 3, 4, 6, 10}),
    dim2_so_pen1_mod6=frozenset({2, 5}),
    dim2_so_pen2_mod6=frozenset({3}),
    dim3_so_pen1_mod7=frozenset({2, 3, 6}),
    dim3_so_pen2_mod7=frozenset({4}),
    dim4_so_pen1_mod15=frozenset({2, 3, 6, 7, 10, 11, 14}),
    dim4_so_pen2_mod15=frozenset({4, 5, 12}),
    e1_mod31=frozenset({2, 3, 5, 6, 7, 8, 10, 11, 12, 14, 18, 19, 20, 22, 26}),
    e2_mod31=frozenset({4}),
    lin5_extra_pen1=frozenset({9, 13}),
    lin5_moved_to_pen2=frozenset({8, 12}),
    so5_pen1_mod31=frozenset({2, 3, 7, 10, 11, 15, 18, 19, 23, 26, 27, 30}),
    so5_pen2_mod31=frozenset({4, 5, 8, 12, 20}),
    so5_extra_pen2=frozenset({13}),
    so5_open_mod31=frozenset({6, 13, 14, 21, 22, 28, 29}),
)

# Lengths up to here have fully classified self-orthogonal codes, so the
# open dimension-5 residues are still exact values below this bound.
SO5_CLASSIFIED_MAX_N = 40


def griesmer_g(k: int, d: int) -> int:
    """Minimal length the staircase bound allows for dimension k, distance d."""
    if k < 1 or d < 1:
        raise DomainError("need k >= 1 and d >= 1")
    return sum((d + (1 << i) - 1) // (1 << i) for i in range(k))


def griesmer_search(n: int, k: int) -> int:
    """Largest d with griesmer_g(k, d) <= n, by direct search."""
    if k < 1 or n < k:
        raise DomainError("need 1 <= k <= n")
    d = 1
    while griesmer_g(k, d + 1) <= n:
        d += 1
    return d


def griesmer_upper(n: int, k: int) -> int:
    """Largest d the staircase bound allows, via the closed forms for k <= 5."""
    if not 1 <= k <= 5:
        raise DomainError("closed forms cover 1 <= k <= 5 only")
    if n < k:
        raise DomainError(f"need n >= {k}")
    if k == 1:
        return n
    if k == 2:
        return (2 * n) // 3
    if k == 3:
        return (4 * n) // 7 - (1 if n % 7 == 2 else 0)
    if k == 4:
        return (8 * n) // 15 - (1 if n % 15 in RESIDUES.dim4_pen1_mod15 else 0)
    base = (16 * n) // 31
    if n % 31 in RESIDUES.e1_mod31:
        return base - 1
    if n % 31 in RESIDUES.e2_mod31:
        return base - 2
    return base


def d_opt(n: int, k: int) -> DistanceValue:
    """Best minimum distance of an [n, k] binary linear code, k <= 5."""
    if not 1 <= k <= 5:
        raise DomainError("formulas cover 1 <= k <= 5 only")
    if n < k:
        raise DomainError(f"need n >= {k} for dimension {k}")
    if k == 1:
        return DistanceValue(n, STATUS_EXACT, "dim1-repetition")
    if k == 2:
        return DistanceValue((2 * n) // 3, STATUS_EXACT, "dim2-formula")
    if k == 3:
        pen = 1 if n % 7 in RESIDUES.dim3_pen1_mod7 else 0
        return DistanceValue((4 * n) // 7 - pen, STATUS_EXACT, "dim3-formula")
    if k == 4:
        pen = 1 if n % 15 in RESIDUES.dim4_pen1_mod15 else 0
        return DistanceValue((8 * n) // 15 - pen, STATUS_EXACT, "dim4-formula")
    base = (16 * n) // 31
    if RESIDUES.in_lin5_pen1(n):
        base -= 1
    elif RESIDUES.in_lin5_pen2(n):
        base -= 2
    return DistanceValue(base, STATUS_EXACT, "dim5-formula")


def dso_opt(n: int, k: int) -> DistanceValue:
    """Best minimum distance of an [n, k] self-orthogonal code, k <= 5.

    Raises NoSOCodeError where no such code exists (dimension 4, lengths
    4..7) and DomainError below each formula's starting length.
    """
    if not 1 <= k <= 5:
        raise DomainError("formulas cover 1 <= k <= 5 only")
    if k == 1:
        if n < 1:
            raise DomainError("need n >= 1")
        if n == 1:
            # the only nonzero vector has odd weight, so nothing qualifies
            raise NoSOCodeError("no [1,1] self-orthogonal code exists")
        return DistanceValue(n - (n & 1), STATUS_EXACT, "dim1-so")
    if k == 2:
        if n < 4:
            raise DomainError("dimension-2 formula starts at n = 4")
        r = n % 6
        pen = 1 if r in RESIDUES.dim2_so_pen1_mod6 else 0
        pen = 2 if r in RESIDUES.dim2_so_pen2_mod6 else pen
        return DistanceValue((2 * n) // 3 - pen, STATUS_EXACT, "dim2-so-formula")
    if k == 3:
        if n < 6:
            raise DomainError("dimension-3 formula starts at n = 6")
        r = n % 7
        pen = 1 if r in RESIDUES.dim3_so_pen1_mod7 else 0
        pen = 2 if r in RESIDUES.dim3_so_pen2_mod7 else pen
        return DistanceValue((4 * n) // 7 - pen, STATUS_EXACT, "dim3-so-formula")
    if k == 4:
        if n < 4:
            raise DomainError("need n >= 4 for dimension 4")
        if n <= 7:
            raise NoSOCodeError(f"no [{n},4] self-orthogonal code exists")
        r = n % 15
        pen = 1 if r in RESIDUES.dim4_so_pen1_mod15 else 0
        pen = 2 if r in RESIDUES.dim4_so_pen2_mod15 or n == 13 else pen
        return DistanceValue((8 * n) // 15 - pen, STATUS_EXACT, "dim4-so-formula")
    if n < 10:
        raise DomainError("dimension-5 values start at n = 10")
    if n != 13 and RESIDUES.in_so5_open(n):
        value = d_opt(n, 5).value - 2
        if n <= SO5_CLASSIFIED_MAX_N:
            return DistanceValue(value, STATUS_EXACT, "dim5-so-classified")
        return DistanceValue(value, STATUS_CONJECTURED, "dim5-so-conjecture")
    base = (16 * n) // 31
    if n % 31 in RESIDUES.so5_pen1_mod31:
        base -= 1
    elif n % 31 in RESIDUES.so5_pen2_mod31 or n in RESIDUES.so5_extra_pen2:
        base -= 2
    return DistanceValue(base, STATUS_EXACT, "dim5-so-formula")


def make_table(n_lo: int, n_hi: int, k: int) -> list[tuple[int, DistanceValue]]:
    """Rows (n, dso_opt(n, k)) for n_lo <= n <= n_hi."""
    if n_lo > n_hi:
        raise DomainError("empty range")
    return [(n, dso_opt(n, k)) for n in range(n_lo, n_hi + 1)]

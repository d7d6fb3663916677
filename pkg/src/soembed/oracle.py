"""Independent brute-force ground truth for embeddings and optimal distances.

Nothing here trusts the closed-form machinery it is used to check: minimal
embeddings come from multiset search over appendable columns, and optimal
distances from exhaustive search over column-multiplicity profiles (which
determine a code up to column permutation).
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .embedding import _dim4_projected_counts, embed
from .errors import CapExceededError, DomainError, NoSOCodeError
from .gf2 import (
    BinaryMatrix,
    _row_ip,
    gram,
    h_column,
    horizontal_join,
    min_distance,
    rank,
    random_matrix,
    simplex_matrix,
)
from .profiles import ColumnProfile, _pair_mask, column_profile
from .tables import CLASS7_MASKS, CLASS8_MASKS

PROFILE_SPACE_CAP = 10**8
ORACLE_K_CAP = 6
ORACLE_ADD_CAP = 8


# ---------------------------------------------------------------------------
# minimal embedding search


def _sym_mask(col_bits: int, k: int) -> int:
    """Pack the outer product of a column with itself into an int.

    Bit positions enumerate the pairs (i, j), i <= j, of a symmetric k x k
    bit matrix.  XOR of these masks tracks how appended columns change the
    Gram matrix.
    """
    acc = 0
    pos = 0
    for i in range(k):
        bi = (col_bits >> (k - 1 - i)) & 1
        for j in range(i, k):
            bj = (col_bits >> (k - 1 - j)) & 1
            acc |= (bi & bj) << pos
            pos += 1
    return acc


def _gram_mask(m: BinaryMatrix) -> int:
    acc = 0
    pos = 0
    for i in range(m.k):
        for j in range(i, m.k):
            acc |= _row_ip(m.rows[i], m.rows[j]) << pos
            pos += 1
    return acc


def min_embedding_oracle(
    m: BinaryMatrix, max_add: int = ORACLE_ADD_CAP
) -> int | None:
    """Least number of appendable nonzero columns that zero the Gram matrix.

    Iterates multisets of column indices in lexicographic order per size
    m = 0, 1, ...; returns None when no multiset within max_add works.
    """
    if m.k > ORACLE_K_CAP:
        raise CapExceededError(f"oracle supports k <= {ORACLE_K_CAP}")
    if max_add > ORACLE_ADD_CAP:
        raise CapExceededError(f"oracle supports max_add <= {ORACLE_ADD_CAP}")
    target = _gram_mask(m)
    if target == 0:
        return 0
    ncols = (1 << m.k) - 1
    masks = [0] + [_sym_mask(i, m.k) for i in range(1, ncols + 1)]
    for size in range(1, max_add + 1):
        for combo in itertools.combinations_with_replacement(
            range(1, ncols + 1), size
        ):
            acc = 0
            for i in combo:
                acc ^= masks[i]
            if acc == target:
                return size
    return None


# ---------------------------------------------------------------------------
# exhaustive optimal distances from profiles


@lru_cache(maxsize=None)
def _hit_masks(k: int) -> tuple[int, ...]:
    """hit[i] has bit x set iff column index i contributes to message x."""
    ncols = (1 << k) - 1
    out = [0] * (ncols + 1)
    for i in range(1, ncols + 1):
        acc = 0
        for x in range(1, ncols + 1):
            if (x & i).bit_count() & 1:
                acc |= 1 << x
        out[i] = acc
    return tuple(out)


def _so_parity_masks(k: int) -> list[int]:
    """All multiplicity-parity vectors (bit i = parity of ell_i) that give
    a self-orthogonal code in dimension k <= 4."""
    if k == 1 or k == 2:
        return [0]
    if k == 3:
        return [0, sum(1 << i for i in range(1, 8))]
    if k == 4:
        full = sum(1 << i for i in range(1, 16))
        masks = {0, full}
        masks.update(CLASS7_MASKS)
        masks.update(CLASS8_MASKS)
        return sorted(masks)
    raise DomainError("profile enumeration supports k <= 4")


def _feasible(
    d: int,
    budget: int,
    step: int,
    base_t: list[int],
    hits: tuple[int, ...],
    half: int,
) -> list[int] | None:
    """Search for per-index unit counts making every message weight >= d.

    Unit counts add `step` copies of their column; base_t carries weights
    already forced (by parity choices).  Returns the unit vector indexed
    1.. or None.
    """
    ncols = len(hits) - 1
    coverage = [0] * (ncols + 2)
    for i in range(1, ncols + 1):
        coverage[i] = coverage[i - 1] | hits[i]
    failed: set[tuple[int, int, bytes]] = set()

    def walk(i: int, rem: int, t: tuple[int, ...]) -> list[int] | None:
        deficit = 0
        worst = 0
        needed_mask = 0
        for x in range(1, ncols + 1):
            gap = d - t[x]
            if gap > 0:
                deficit += gap
                needed_mask |= 1 << x
                if gap > worst:
                    worst = gap
        if deficit == 0:
            return [0] * i
        if needed_mask & ~coverage[i]:
            return None
        if worst > step * rem or deficit > step * rem * half:
            return None
        key = (i, rem, bytes(min(v, d) for v in t[1:]))
        if key in failed:
            return None
        hit = hits[i]
        for v in range(rem + 1):
            if v:
                t = tuple(
                    t[x] + step if (hit >> x) & 1 else t[x]
                    for x in range(ncols + 1)
                )
            sub = walk(i - 1, rem - v, t)
            if sub is not None:
                sub.append(v)
                return sub
        failed.add(key)
        return None

    units = walk(ncols, budget, tuple(base_t))
    return units


@dataclass(frozen=True)
class EnumerationResult:
    distance: int
    witness: ColumnProfile


def enumerate_codes_by_profile(
    n: int, k: int, so_only: bool = False
) -> EnumerationResult:
    """Best minimum distance over all rank-k length-n profiles.

    Searches multiplicity vectors summing to n (zero columns absorb slack),
    restricted to self-orthogonal parities when so_only.  Raises
    NoSOCodeError when nothing of rank k qualifies.
    """
    if not 1 <= k <= 4:
        raise DomainError("profile enumeration supports k <= 4")
    if n < 1:
        raise DomainError("need n >= 1")
    ncols = (1 << k) - 1
    if math.comb(n + ncols, ncols) > PROFILE_SPACE_CAP:
        raise CapExceededError("profile space exceeds the enumeration cap")
    hits = _hit_masks(k)
    half = 1 << (k - 1)
    parities = _so_parity_masks(k) if so_only else None
    d_hi = min(n, (half * n) // ncols)
    for d in range(d_hi, 0, -1):
        witness = _search_profile(n, k, d, hits, half, parities)
        if witness is not None:
            return EnumerationResult(d, witness)
    kind = "self-orthogonal " if so_only else ""
    raise NoSOCodeError(f"no rank-{k} {kind}code of length {n} exists")


def _search_profile(
    n: int,
    k: int,
    d: int,
    hits: tuple[int, ...],
    half: int,
    parities: list[int] | None,
) -> ColumnProfile | None:
    """One feasibility level of the enumeration: any profile with min
    weight >= d, or None."""
    ncols = (1 << k) - 1
    if parities is None:
        units = _feasible(d, n, 1, [0] * (ncols + 1), hits, half)
        if units is None:
            return None
        ell = units
    else:
        ell = None
        for bmask in parities:
            nbase = bmask.bit_count()
            if nbase > n:
                continue
            base_t = [0] * (ncols + 1)
            for i in range(1, ncols + 1):
                if (bmask >> i) & 1:
                    for x in range(1, ncols + 1):
                        if (hits[i] >> x) & 1:
                            base_t[x] += 1
            units = _feasible(d, (n - nbase) // 2, 2, base_t, hits, half)
            if units is not None:
                ell = [
                    ((bmask >> i) & 1) + 2 * units[i - 1]
                    for i in range(1, ncols + 1)
                ]
                break
        if ell is None:
            return None
    used = sum(ell)
    return ColumnProfile(k, tuple(ell), n - used)


def targeted_profile(n: int, k: int, d: int, so_only: bool) -> ColumnProfile | None:
    """One feasibility query without the enumeration-space cap.

    Used for seed generation at lengths where the full enumeration would
    be refused; the result is still verified independently when loaded.
    """
    if not 1 <= k <= 4:
        raise DomainError("profile search supports k <= 4")
    hits = _hit_masks(k)
    parities = _so_parity_masks(k) if so_only else None
    return _search_profile(n, k, d, hits, 1 << (k - 1), parities)


def matrix_from_profile(p: ColumnProfile) -> BinaryMatrix:
    """A matrix realizing a profile: columns ascending by index, zeros last."""
    cols = []
    for i in range(1, (1 << p.k)):
        cols.extend([h_column(p.k, i)] * p.count(i))
    cols.extend([(0,) * p.k] * p.zero_count)
    base = BinaryMatrix(p.k, 0, (0,) * p.k)
    return horizontal_join(base, cols)


def enumerate_codes_naive(
    n: int, k: int, so_only: bool = False
) -> EnumerationResult:
    """Reference implementation: literally iterate every composition.

    Only usable for small spaces; cross-checks the pruned search.
    """
    ncols = (1 << k) - 1
    hits = _hit_masks(k)
    pairs = [
        _pair_mask(k, j, j2)
        for j in range(1, k + 1)
        for j2 in range(j, k + 1)
    ]
    best: tuple[int, ColumnProfile] | None = None
    for ell in _compositions_at_most(n, ncols):
        t = [0] * (ncols + 1)
        for i, c in enumerate(ell, start=1):
            if c:
                for x in range(1, ncols + 1):
                    if (hits[i] >> x) & 1:
                        t[x] += c
        dmin = min(t[1:])
        if dmin == 0:
            continue
        prof = ColumnProfile(k, tuple(ell), n - sum(ell))
        if so_only:
            odd = prof.parity_mask()
            if any((odd & pm).bit_count() & 1 for pm in pairs):
                continue
        if best is None or dmin > best[0]:
            best = (dmin, prof)
    if best is None:
        kind = "self-orthogonal " if so_only else ""
        raise NoSOCodeError(f"no rank-{k} {kind}code of length {n} exists")
    return EnumerationResult(best[0], best[1])


def _compositions_at_most(total: int, parts: int):
    """All nonnegative integer vectors of given length with sum <= total."""
    if parts == 0:
        yield ()
        return
    for head in range(total + 1):
        for tail in _compositions_at_most(total - head, parts - 1):
            yield (head,) + tail


# ---------------------------------------------------------------------------
# the dimension-4 worst-case pattern sweep


@dataclass(frozen=True)
class Claims414:
    """Exhaustive append-count maxima over the two tight pattern families."""

    max1: int
    max2: int
    count1: int
    count2: int


def verify_claims_prop414() -> Claims414:
    """Sweep every odd-parity pattern that projects to 7 = 3 + 4 or 6
    columns on the first split and record the worst minimized total."""
    bits7 = sorted(i for i in range(1, 16) if (CLASS7_MASKS[0] >> i) & 1)
    bits8 = sorted(i for i in range(1, 16) if (CLASS8_MASKS[0] >> i) & 1)

    def sweep(size7: int, size8: int) -> tuple[int, int]:
        worst = 0
        count = 0
        for sub7 in itertools.combinations(bits7, size7):
            m7 = sum(1 << i for i in sub7)
            for sub8 in itertools.combinations(bits8, size8):
                j1 = m7 | sum(1 << i for i in sub8)
                count += 1
                m = min(_dim4_projected_counts(j1))
                if m > worst:
                    worst = m
        return worst, count

    max1, count1 = sweep(3, 4)
    w33, c33 = sweep(3, 3)
    w24, c24 = sweep(2, 4)
    return Claims414(max1, max(w33, w24), count1, c33 + c24)


# ---------------------------------------------------------------------------
# randomized search for good self-orthogonal codes


def _parity_kernel_basis(k: int) -> list[int]:
    """Index sets (as bitmasks) whose columns' outer products cancel.

    Flipping the multiplicity parity on such a set preserves the Gram
    matrix, so these are the self-orthogonality-preserving parity moves.
    """
    ncols = (1 << k) - 1
    vecs = [(_sym_mask(i, k), 1 << i) for i in range(1, ncols + 1)]
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for val, tag in vecs:
        v, t = val, tag
        while v:
            p = v.bit_length() - 1
            if p in pivots:
                pv, pt = pivots[p]
                v ^= pv
                t ^= pt
            else:
                pivots[p] = (v, t)
                break
        else:
            kernel.append(t)
    return kernel


@lru_cache(maxsize=None)
def _coset_leaders(k: int) -> tuple[int, ...]:
    """Per outer-product syndrome, a minimum set of parity flips fixing it.

    leaders[syndrome] is an index bitmask S with XOR of _sym_mask over S
    equal to the syndrome and |S| minimal (breadth-first over flip count).
    Only built for k <= 5, where the syndrome space is small.
    """
    nsyn = 1 << (k * (k + 1) // 2)
    ncols = (1 << k) - 1
    masks = [_sym_mask(i, k) for i in range(1, ncols + 1)]
    leaders = [-1] * nsyn
    leaders[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for syn in frontier:
            lead = leaders[syn]
            for i, sm in enumerate(masks, start=1):
                if lead >> i & 1:
                    continue
                syn2 = syn ^ sm
                if leaders[syn2] == -1:
                    leaders[syn2] = lead | (1 << i)
                    nxt.append(syn2)
        frontier = nxt
    return tuple(leaders)


def _profile_weights(ell: list[int], hits: tuple[int, ...], ncols: int) -> list[int]:
    t = [0] * (ncols + 1)
    for i in range(1, ncols + 1):
        c = ell[i]
        if c:
            h = hits[i]
            for x in range(1, ncols + 1):
                if (h >> x) & 1:
                    t[x] += c
    return t


def random_so_search(
    n: int,
    k: int,
    trials: int,
    target_d: int | None = None,
    rng_seed: int = 0,
) -> int:
    """Best minimum distance found over random self-orthogonal [n, k] codes.

    Each trial keeps the length at exactly n: a plain random matrix is kept
    only if already self-orthogonal; otherwise candidates come from greedy
    balanced column growth with a minimal parity repair, from embedding a
    shorter random matrix and padding back with duplicated column pairs, or
    (when n is long enough) from a simplex juxtaposition.  Every candidate
    is then improved by parity-preserving local moves (shifting duplicate
    pairs between indices, or flipping a parity pattern whose outer
    products cancel).  Deterministic for a given seed; returns 0 if no
    trial produces a rank-k self-orthogonal matrix.
    """
    found, _ = random_so_profile_search(n, k, trials, target_d, rng_seed)
    return found


def random_so_profile_search(
    n: int,
    k: int,
    trials: int,
    target_d: int | None = None,
    rng_seed: int = 0,
) -> tuple[int, ColumnProfile | None]:
    """random_so_search plus the witness profile of the best sample."""
    if k > 8:
        raise CapExceededError("random search supports k <= 8")
    rng = random.Random(rng_seed)
    ncols = (1 << k) - 1
    hits = _hit_masks(k)
    kernel = _parity_kernel_basis(k)
    leaders = _coset_leaders(k) if k <= 5 else None
    best = 0
    best_profile: ColumnProfile | None = None

    def greedy_candidate() -> list[int] | None:
        """Grow columns maximizing the running minimum weight, then flip a
        minimal parity set (syndrome-decoded) to land on self-orthogonality."""
        ell = [0] * (ncols + 1)
        t = [0] * (ncols + 1)
        reserve = rng.randrange(0, 5)
        for _ in range(max(n - reserve, 0)):
            options = []
            for i in range(1, ncols + 1):
                h = hits[i]
                worst = min(
                    t[x] + ((h >> x) & 1) for x in range(1, ncols + 1)
                )
                options.append((worst, rng.random(), i))
            _, _, pick = max(options)
            ell[pick] += 1
            h = hits[pick]
            for x in range(1, ncols + 1):
                if (h >> x) & 1:
                    t[x] += 1
        syn = 0
        for i in range(1, ncols + 1):
            if ell[i] & 1:
                syn ^= _sym_mask(i, k)
        flips = leaders[syn]
        for i in range(1, ncols + 1):
            if (flips >> i) & 1:
                if sum(ell[1:]) < n:
                    ell[i] += 1
                elif ell[i] >= 1:
                    ell[i] -= 1
                else:
                    return None
        if sum(ell[1:]) > n:
            return None
        ell[0] = n - sum(ell[1:])
        return ell

    def score_of(t: list[int]) -> tuple[int, int]:
        dmin = min(t[1:])
        return dmin, -t[1:].count(dmin)

    def parity_is_so(ell: list[int]) -> bool:
        odd = sum(1 << i for i in range(1, ncols + 1) if ell[i] & 1)
        return not any(
            (odd & _pair_mask(k, j, j2)).bit_count() & 1
            for j in range(1, k + 1)
            for j2 in range(j, k + 1)
        )

    def climb(ell: list[int]) -> int:
        ell[0] = n - sum(ell[1:])
        t = _profile_weights(ell, hits, ncols)
        cur = score_of(t)
        stalls = 0
        for _ in range(60 * ncols):
            if target_d is not None and cur[0] >= target_d:
                break
            worst = t[1:].index(cur[0]) + 1
            # move a duplicate pair onto a column covering the worst message
            donors = [i for i in range(ncols + 1) if ell[i] >= 2]
            receivers = [
                i for i in range(1, ncols + 1) if (hits[i] >> worst) & 1
            ]
            rng.shuffle(donors)
            rng.shuffle(receivers)
            moved = False
            for a in donors:
                ha = hits[a] if a else 0
                for b in receivers:
                    if a == b:
                        continue
                    t2 = [
                        t[x] + 2 * (((hits[b] >> x) & 1) - ((ha >> x) & 1))
                        for x in range(ncols + 1)
                    ]
                    if score_of(t2) > cur:
                        ell[a] -= 2
                        ell[b] += 2
                        t, cur = t2, score_of(t2)
                        moved = True
                        break
                if moved:
                    break
            if not moved and kernel:
                # flip the parity of a cancelling index set; the zero-column
                # count absorbs any imbalance so the length stays n
                mask = kernel[rng.randrange(len(kernel))]
                for kb in kernel:
                    if rng.random() < 0.3:
                        mask ^= kb
                idxs = [i for i in range(1, ncols + 1) if (mask >> i) & 1]
                trial = ell.copy()
                for i in idxs:
                    if trial[i] >= 1 and rng.random() < 0.5:
                        trial[i] -= 1
                    else:
                        trial[i] += 1
                trial[0] = n - sum(trial[1:])
                if trial[0] >= 0:
                    t2 = _profile_weights(trial, hits, ncols)
                    if score_of(t2) >= cur:
                        ell[:] = trial
                        t, cur = t2, score_of(t2)
                        moved = True
            if not moved:
                stalls += 1
                if stalls > 8:
                    break
            else:
                stalls = 0
        return cur[0] if cur[0] > 0 else 0

    for _ in range(trials):
        ell: list[int] | None = None
        mode = rng.random()
        if mode < 0.1:
            cand = random_matrix(rng, k, n)
            if gram(cand).is_zero() and rank(cand) == k:
                prof = column_profile(cand)
                ell = [prof.zero_count, *prof.ell]
        elif mode < 0.3 and n >= ncols and k >= 3:
            # simplex juxtaposition start, remainder as random pairs
            ell = [0] + [1] * ncols
            spare = n - ncols
            while spare >= 2:
                ell[rng.randrange(1, ncols + 1)] += 2
                spare -= 2
            ell[0] = spare
        elif mode < 0.65 and leaders is not None:
            ell = greedy_candidate()
        else:
            drop = rng.randrange(0, min(n - k, 9) + 1) if n > k else 0
            base = random_matrix(rng, k, n - drop)
            rep = embed(base, allow_rank_deficient=True)
            fill = n - rep.output.n
            if fill >= 0 and fill % 2 == 0 and rank(rep.output) == k:
                prof = column_profile(rep.output)
                ell = [prof.zero_count, *prof.ell]
                for _ in range(fill // 2):
                    ell[rng.randrange(1, ncols + 1)] += 2
        if ell is None:
            continue
        found = climb(ell)
        if found > best and parity_is_so(ell):
            best = found
            best_profile = ColumnProfile(k, tuple(ell[1:]), ell[0])
            if target_d is not None and best >= target_d:
                break
    return best, best_profile

"""Fixed index tables behind the dimension-4 self-orthogonality test.

For each split s = 1..15 the index range {1..15} is cut into a 7-element
class and an 8-element class; parity constancy of the column multiplicities
on both classes, for some s, is exactly dimension-4 self-orthogonality.
The companion pair families group indices into sum-comparable pairs and
drive consistency checks on the class tables.

The data is literal constant data; :func:`validate_tables` runs at import
so a transcription error fails loudly instead of corrupting embeddings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Pair = tuple[int, int]

_PAIRS_SMALL: tuple[tuple[Pair, ...], ...] = (
    ((2, 3), (4, 5), (6, 7)),
    ((1, 3), (4, 6), (5, 7)),
    ((1, 2), (4, 7), (5, 6)),
    ((1, 5), (2, 6), (3, 7)),
    ((1, 4), (2, 7), (3, 6)),
    ((1, 7), (2, 4), (3, 5)),
    ((1, 6), (2, 5), (3, 4)),
    ((1, 9), (2, 10), (3, 11)),
    ((1, 8), (2, 11), (3, 10)),
    ((1, 11), (2, 8), (3, 9)),
    ((1, 10), (2, 9), (3, 8)),
    ((1, 13), (2, 14), (3, 15)),
    ((1, 12), (2, 15), (3, 14)),
    ((1, 15), (2, 12), (3, 13)),
    ((1, 14), (2, 13), (3, 12)),
)

_PAIRS_LARGE: tuple[tuple[Pair, ...], ...] = (
    ((8, 9), (10, 11), (12, 13), (14, 15)),
    ((8, 10), (9, 11), (12, 14), (13, 15)),
    ((8, 11), (9, 10), (12, 15), (13, 14)),
    ((8, 12), (9, 13), (10, 14), (11, 15)),
    ((8, 13), (9, 12), (10, 15), (11, 14)),
    ((8, 14), (9, 15), (10, 12), (11, 13)),
    ((8, 15), (9, 14), (10, 13), (11, 12)),
    ((4, 12), (5, 13), (6, 14), (7, 15)),
    ((4, 13), (5, 12), (6, 15), (7, 14)),
    ((4, 14), (5, 15), (6, 12), (7, 13)),
    ((4, 15), (5, 14), (6, 13), (7, 12)),
    ((4, 8), (5, 9), (6, 10), (7, 11)),
    ((4, 9), (5, 8), (6, 11), (7, 10)),
    ((4, 10), (5, 11), (6, 8), (7, 9)),
    ((4, 11), (5, 10), (6, 9), (7, 8)),
)

_CLASS7: tuple[frozenset[int], ...] = tuple(
    frozenset(c)
    for c in (
        (1, 2, 3, 4, 5, 6, 7),
        (1, 2, 3, 8, 9, 10, 11),
        (1, 2, 3, 12, 13, 14, 15),
        (1, 4, 5, 8, 9, 12, 13),
        (1, 4, 5, 10, 11, 14, 15),
        (1, 6, 7, 8, 9, 14, 15),
        (1, 6, 7, 10, 11, 12, 13),
        (2, 4, 6, 8, 10, 12, 14),
        (2, 4, 6, 9, 11, 13, 15),
        (2, 5, 7, 8, 10, 13, 15),
        (2, 5, 7, 9, 11, 12, 14),
        (3, 4, 7, 8, 11, 12, 15),
        (3, 4, 7, 9, 10, 13, 14),
        (3, 5, 6, 8, 11, 13, 14),
        (3, 5, 6, 9, 10, 12, 15),
    )
)

_CLASS8: tuple[frozenset[int], ...] = tuple(
    frozenset(c)
    for c in (
        (8, 9, 10, 11, 12, 13, 14, 15),
        (4, 5, 6, 7, 12, 13, 14, 15),
        (4, 5, 6, 7, 8, 9, 10, 11),
        (2, 3, 6, 7, 10, 11, 14, 15),
        (2, 3, 6, 7, 8, 9, 12, 13),
        (2, 3, 4, 5, 10, 11, 12, 13),
        (2, 3, 4, 5, 8, 9, 14, 15),
        (1, 3, 5, 7, 9, 11, 13, 15),
        (1, 3, 5, 7, 8, 10, 12, 14),
        (1, 3, 4, 6, 9, 11, 12, 14),
        (1, 3, 4, 6, 8, 10, 13, 15),
        (1, 2, 5, 6, 9, 10, 13, 14),
        (1, 2, 5, 6, 8, 11, 12, 15),
        (1, 2, 4, 7, 9, 10, 12, 15),
        (1, 2, 4, 7, 8, 11, 13, 14),
    )
)


@dataclass(frozen=True)
class Dim4Tables:
    """The 15 pair families and index-class partitions, 1-based in s."""

    pairs_small: tuple[tuple[Pair, ...], ...]
    pairs_large: tuple[tuple[Pair, ...], ...]
    class7: tuple[frozenset[int], ...]
    class8: tuple[frozenset[int], ...]

    def pair_family(self, s: int, t: int) -> tuple[Pair, ...]:
        return (self.pairs_small, self.pairs_large)[t - 1][s - 1]

    def index_class(self, s: int, t: int) -> frozenset[int]:
        return (self.class7, self.class8)[t - 1][s - 1]

    def to_json_dict(self) -> dict:
        return {
            "pairs": [
                {
                    "s": s,
                    "small": [list(p) for p in self.pairs_small[s - 1]],
                    "large": [list(p) for p in self.pairs_large[s - 1]],
                }
                for s in range(1, 16)
            ],
            "classes": [
                {
                    "s": s,
                    "seven": sorted(self.class7[s - 1]),
                    "eight": sorted(self.class8[s - 1]),
                }
                for s in range(1, 16)
            ],
        }


def class_masks(tables: Dim4Tables) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bitmask views of the index classes (bit i set for index i)."""
    m7 = tuple(sum(1 << i for i in c) for c in tables.class7)
    m8 = tuple(sum(1 << i for i in c) for c in tables.class8)
    return m7, m8


def validate_tables(tables: Dim4Tables) -> None:
    """Structural checks on the constant data; raises on any corruption."""
    full = frozenset(range(1, 16))
    for s in range(1, 16):
        c7 = tables.index_class(s, 1)
        c8 = tables.index_class(s, 2)
        if len(c7) != 7 or len(c8) != 8:
            raise AssertionError(f"class sizes wrong at s={s}")
        if c7 | c8 != full or c7 & c8:
            raise AssertionError(f"classes do not partition 1..15 at s={s}")
        small = tables.pair_family(s, 1)
        large = tables.pair_family(s, 2)
        if len(small) != 3 or len(large) != 4:
            raise AssertionError(f"pair family sizes wrong at s={s}")
        if s <= 7:
            appearing = {x for p in small for x in p}
            if appearing != frozenset(range(1, 8)) - {s}:
                raise AssertionError(f"small pair family misses 1..7 minus s at s={s}")
    # Every unordered pair from {8..15} occurs in some large family with s <= 7.
    covered = {
        frozenset(p) for s in range(1, 8) for p in tables.pair_family(s, 2)
    }
    for i, j in itertools.combinations(range(8, 16), 2):
        if frozenset((i, j)) not in covered:
            raise AssertionError(f"pair ({i},{j}) missing from the large families")
    if verify_sigma_symmetry(tables) is None:
        raise AssertionError("class tables are not closed under the split maps")


def verify_sigma_symmetry(tables: Dim4Tables) -> dict[tuple[int, int], int] | None:
    """Check that relabeling by any split's sorted classes permutes the family.

    For each s, the permutation sending (sorted 7-class, sorted 8-class)
    onto (1..15) must map every class pair (s', t) onto some class pair
    (j, t) of the same family.  Returns the witness map (s, i) -> j on
    success, or None if the family is not closed (corrupted data).
    """
    witness: dict[tuple[int, int], int] = {}
    pair_lookup = {
        (tables.class7[j], tables.class8[j]): j + 1 for j in range(15)
    }
    for s in range(1, 16):
        order = sorted(tables.index_class(s, 1)) + sorted(tables.index_class(s, 2))
        if sorted(order) != list(range(1, 16)):
            return None
        sigma = {v: pos + 1 for pos, v in enumerate(order)}
        for i in range(1, 16):
            image7 = frozenset(sigma[x] for x in tables.class7[i - 1])
            image8 = frozenset(sigma[x] for x in tables.class8[i - 1])
            j = pair_lookup.get((image7, image8))
            if j is None:
                return None
            witness[(s, i)] = j
    return witness


DIM4_TABLES = Dim4Tables(
    pairs_small=_PAIRS_SMALL,
    pairs_large=_PAIRS_LARGE,
    class7=_CLASS7,
    class8=_CLASS8,
)

validate_tables(DIM4_TABLES)

CLASS7_MASKS, CLASS8_MASKS = class_masks(DIM4_TABLES)

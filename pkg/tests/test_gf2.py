"""Core GF(2) matrix operations against hand-checked and brute-force values."""

import random

import pytest

from soembed.errors import (
    BadCharacterError,
    CapExceededError,
    EmptyInputError,
    IndexOutOfRangeError,
    LengthMismatchError,
    RaggedRowsError,
    ZeroCodeError,
)
from soembed.gf2 import (
    BinaryMatrix,
    LinearCode,
    gram,
    h_column,
    horizontal_join,
    inner_product,
    min_distance,
    naive_min_distance,
    parse_matrix,
    random_matrix,
    rank,
    simplex_matrix,
    weight_distribution,
)

G_10_3 = parse_matrix("0000111111\n0111001111\n1011010001")
G_7_4 = parse_matrix("0000111\n0011001\n0101010\n1001011")
TG_8_4 = parse_matrix("00001111\n00110011\n01010101\n10010110")
TG_10_2 = parse_matrix("0001111011\n1110001101")


def test_parse_basic():
    m = parse_matrix("011\n101")
    assert (m.k, m.n) == (2, 3)
    assert m.row_bits(0) == (0, 1, 1)
    assert m.row_bits(1) == (1, 0, 1)


def test_parse_smallest():
    m = parse_matrix("0")
    assert (m.k, m.n) == (1, 1)
    assert m.rows == (0,)


def test_parse_whitespace_and_comments():
    assert parse_matrix("01 1\n1 01") == parse_matrix("011\n101")
    assert parse_matrix("# header\n011  # trailing\n\n101\r\n") == parse_matrix(
        "011\n101"
    )


def test_parse_errors():
    with pytest.raises(EmptyInputError):
        parse_matrix("# only a comment\n\n")
    with pytest.raises(RaggedRowsError):
        parse_matrix("01\n011")
    with pytest.raises(BadCharacterError):
        parse_matrix("012")


def test_parse_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 20))
        assert parse_matrix(m.to_text()) == m


def test_rank_examples():
    assert rank(simplex_matrix(3)) == 3
    assert rank(parse_matrix("011\n011")) == 1
    # by-hand Gaussian elimination gives four pivots
    assert rank(G_7_4) == 4


def test_inner_product():
    assert inner_product((1, 1, 0), (1, 1, 1)) == 0
    assert inner_product((1, 0, 1), (0, 0, 1)) == 1
    r1 = G_10_3.row_bits(0)
    assert sum(r1) == 6 and inner_product(r1, r1) == 0
    with pytest.raises(LengthMismatchError):
        inner_product((1, 0), (1, 0, 1))


def test_gram_examples():
    tg = horizontal_join(G_10_3, [h_column(3, 3)])
    assert gram(tg).is_zero()
    eye = parse_matrix("10\n01")
    assert gram(eye) == eye
    g = gram(G_10_3)
    assert g.entry(2, 2) == 1  # bottom row has odd weight


def test_gram_symmetric_random():
    rng = random.Random(5)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(1, 7), rng.randint(1, 30))
        g = gram(m)
        for i in range(m.k):
            for j in range(m.k):
                assert g.entry(i, j) == g.entry(j, i)


def test_min_distance_examples():
    assert min_distance(G_7_4) == 3
    assert min_distance(TG_8_4) == 4
    assert min_distance(TG_10_2) == 6


def test_min_distance_matches_naive():
    rng = random.Random(7)
    for _ in range(150):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 16))
        if all(r == 0 for r in m.rows):
            continue
        assert min_distance(m) == naive_min_distance(m)


def test_min_distance_rank_deficient_visits_row_space():
    m = parse_matrix("011\n011")
    # the row space has one nonzero codeword, of weight 2
    assert min_distance(m) == 2


def test_min_distance_zero_code():
    with pytest.raises(ZeroCodeError):
        min_distance(parse_matrix("000\n000"))


def test_min_distance_cap():
    eye41 = BinaryMatrix(41, 41, tuple(1 << i for i in range(41)))
    with pytest.raises(CapExceededError):
        min_distance(eye41)


def test_weight_distribution():
    assert weight_distribution(TG_8_4) == {0: 1, 4: 14, 8: 1}
    assert weight_distribution(parse_matrix("11")) == {0: 1, 2: 1}
    assert weight_distribution(simplex_matrix(3)) == {0: 1, 4: 7}


def test_weight_distribution_sums():
    rng = random.Random(13)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 20))
        wd = weight_distribution(m)
        assert sum(wd.values()) == 1 << rank(m)
        nonzero = [w for w in wd if w > 0]
        if nonzero:
            assert min(nonzero) == min_distance(m)


def test_h_column():
    assert h_column(3, 1) == (0, 0, 1)
    assert h_column(3, 6) == (1, 1, 0)
    assert h_column(4, 14) == (1, 1, 1, 0)
    with pytest.raises(IndexOutOfRangeError):
        h_column(3, 8)
    with pytest.raises(IndexOutOfRangeError):
        h_column(3, 0)


def test_simplex_matrix():
    s2 = simplex_matrix(2)
    assert [s2.column(j) for j in range(3)] == [(0, 1), (1, 0), (1, 1)]
    assert min_distance(simplex_matrix(3)) == 4
    assert min_distance(simplex_matrix(4)) == 8
    for k in range(1, 7):
        sk = simplex_matrix(k)
        cols = {sk.column(j) for j in range(sk.n)}
        assert len(cols) == (1 << k) - 1 and (0,) * k not in cols
        assert set(weight_distribution(sk)) == {0, 1 << (k - 1)}


def test_horizontal_join():
    tg = horizontal_join(G_10_3, [h_column(3, 3)])
    assert tg == parse_matrix("00001111110\n01110011111\n10110100011")
    assert horizontal_join(G_10_3, []) == G_10_3
    h2 = simplex_matrix(2)
    doubled = horizontal_join(h2, [h2.column(j) for j in range(3)])
    from soembed.profiles import column_profile

    assert column_profile(doubled).ell == (2, 2, 2)
    with pytest.raises(LengthMismatchError):
        horizontal_join(G_10_3, [(1, 0)])


def test_join_preserves_rank_and_distance():
    # appending columns never loses rank, and cannot add any once the rows
    # are already independent
    rng = random.Random(3)
    for _ in range(60):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(2, 16))
        if all(r == 0 for r in m.rows):
            continue
        cols = [
            tuple(rng.randint(0, 1) for _ in range(m.k))
            for _ in range(rng.randint(1, 4))
        ]
        joined = horizontal_join(m, cols)
        assert rank(joined) >= rank(m)
        if rank(m) == m.k:
            # no new codewords appear, and puncturing the joined code back
            # to the original coordinates never gains weight
            assert rank(joined) == m.k
            assert min_distance(joined) >= min_distance(m)
        assert joined.rows[0] & ((1 << m.n) - 1) == m.rows[0]


def test_linear_code_caching():
    code = LinearCode(G_7_4)
    assert code.rank == 4
    assert code.dmin == 3
    assert code.n == 7

#!/usr/bin/env python3
"""
Tests for GF(2) matrices: construction, elimination, products and the .g2m format
"""

import random
import sys
from pathlib import Path

import pytest

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from modules.gf2 import (
    BitMatrix,
    gram,
    in_rowspace,
    intersect_rowspaces,
    inverse,
    is_invertible,
    matmul,
    nullspace,
    rank,
    rank_of_rows,
    rref,
)


def _random_matrix(rng: random.Random, rows: int, cols: int) -> BitMatrix:
    return BitMatrix(tuple(rng.getrandbits(cols) for _ in range(rows)), cols)


def test_from_rows_strings_and_lists_agree():
    a = BitMatrix.from_rows(["101", "011"])
    b = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert a == b
    assert a.shape == (2, 3)
    assert a.entry(0, 2) == 1
    assert a.column(2) == 0b11
    assert a.to_lists() == [[1, 0, 1], [0, 1, 1]]


def test_from_rows_rejects_ragged_and_non_bits():
    with pytest.raises(ValueError):
        BitMatrix.from_rows(["10", "101"])
    with pytest.raises(ValueError):
        BitMatrix.from_rows([[1, 2]])


def test_rank_of_identity_and_zero():
    assert rank(BitMatrix.identity(7)) == 7
    assert rank(BitMatrix.zeros(3, 5)) == 0
    assert rank(BitMatrix.ones(4, 6)) == 1


def test_rref_keeps_shape_and_sinks_zero_rows():
    m = BitMatrix.from_rows(["110", "110", "011"])
    reduced, pivots = rref(m)
    assert reduced.shape == m.shape
    assert pivots == [0, 1]
    assert reduced.rows[-1] == 0
    assert rank(reduced) == rank(m) == 2


def test_transpose_twice_is_identity():
    rng = random.Random(1)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 8), rng.randint(1, 12))
        assert m.transpose().transpose() == m


def test_matmul_with_identity_and_associativity():
    rng = random.Random(2)
    a = _random_matrix(rng, 4, 5)
    b = _random_matrix(rng, 5, 6)
    c = _random_matrix(rng, 6, 3)
    assert matmul(a, BitMatrix.identity(5)) == a
    assert matmul(matmul(a, b), c) == matmul(a, matmul(b, c))


def test_gram_is_g_times_transpose():
    rng = random.Random(3)
    g = _random_matrix(rng, 5, 11)
    assert gram(g) == matmul(g, g.transpose())


def test_nullspace_is_orthogonal_and_complementary():
    rng = random.Random(4)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 6), rng.randint(2, 10))
        null = nullspace(m)
        assert rank(m) + null.row_count == m.col_count
        if null.row_count:
            assert matmul(m, null.transpose()).is_zero()


def test_inverse_round_trip():
    rng = random.Random(5)
    found = 0
    while found < 10:
        m = _random_matrix(rng, 5, 5)
        if not is_invertible(m):
            with pytest.raises(ValueError):
                inverse(m)
            continue
        found += 1
        assert matmul(m, inverse(m)) == BitMatrix.identity(5)


def test_intersect_rowspaces_of_overlapping_spans():
    a = BitMatrix.from_rows(["1100", "0011"])
    b = BitMatrix.from_rows(["1111", "1000"])
    meet = intersect_rowspaces(a, b)
    assert rank(meet) == 1
    assert meet.rows[0] == 0b1111
    assert in_rowspace(0b1111, a) and in_rowspace(0b1111, b)


def test_rank_of_rows_matches_rank():
    rng = random.Random(6)
    m = _random_matrix(rng, 9, 7)
    assert rank_of_rows(m.rows) == rank(m)


def test_g2m_text_and_file(tmp_path):
    m = BitMatrix.from_rows(["1011", "0110"])
    assert m.to_g2m() == "2 4\n1011\n0110\n"
    assert BitMatrix.from_g2m(m.to_g2m()) == m
    path = m.write_g2m(tmp_path / "sub" / "m.g2m")
    assert BitMatrix.read_g2m(path) == m


@pytest.mark.parametrize(
    "text",
    [
        "",
        "2\n10\n01\n",
        "2 2\n10\n",
        "2 2\n10\n012\n",
        "1 3\n10a\n",
    ],
)
def test_g2m_rejects_malformed_text(text):
    with pytest.raises(ValueError):
        BitMatrix.from_g2m(text)

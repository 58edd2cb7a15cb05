import random

import pytest

import convcode as cc
from convcode.gf2 import (
    BitMatrix,
    BitVector,
    DimensionError,
    SizeGuardError,
    enumerate_invertible,
    gl2_order,
    inverse,
    mat_mul,
    mat_vec,
    rank,
    right_kernel_basis,
    rref,
    solve,
)
from tests.conftest import GI1_ROWS, GI2_ROWS


def stacked_gi() -> BitMatrix:
    g1 = BitMatrix.from_rows(GI1_ROWS)
    g2 = BitMatrix.from_rows(GI2_ROWS)
    return cc.block_diag([g1, g2])


def test_rank_identity():
    assert rank(BitMatrix.identity(3)) == 3


def test_rank_dependent_row():
    m = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 0]])
    assert rank(m) == 2


def test_rank_stacked_block_diagonal():
    assert rank(stacked_gi()) == 4


def test_rref_identity():
    r, pivots = rref(BitMatrix.identity(3))
    assert r == BitMatrix.identity(3)
    assert pivots == (0, 1, 2)


def test_rref_rank_one():
    r, pivots = rref(BitMatrix.from_rows([[1, 1], [1, 1]]))
    assert r.to_lists() == [[1, 1], [0, 0]]
    assert pivots == (0,)


def test_rref_row_swap():
    r, pivots = rref(BitMatrix.from_rows([[0, 1], [1, 0]]))
    assert r == BitMatrix.identity(2)
    assert pivots == (0, 1)


def test_mat_mul_identity():
    a = BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
    assert mat_mul(a, BitMatrix.identity(3)) == a


def test_mat_mul_gf2_addition():
    a = BitMatrix.from_rows([[1, 1]])
    b = BitMatrix.from_rows([[1], [1]])
    assert mat_mul(a, b).to_lists() == [[0]]


def test_mat_mul_dimension_mismatch():
    with pytest.raises(DimensionError):
        mat_mul(BitMatrix.identity(2), BitMatrix.identity(3))


def test_solve_identity():
    b = BitVector.from_bits([1, 0, 1])
    assert solve(BitMatrix.identity(3), b) == b


def test_solve_underdetermined_any_valid():
    a = BitMatrix.from_rows([[1, 1]])
    b = BitVector.from_bits([1])
    x = solve(a, b)
    assert x is not None
    assert mat_vec(a, x) == b


def test_solve_inconsistent():
    a = BitMatrix.from_rows([[1], [1]])
    assert solve(a, BitVector.from_bits([1, 0])) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve(BitMatrix.identity(2), BitVector.from_bits([1, 0, 0]))


def test_kernel_identity_empty():
    assert right_kernel_basis(BitMatrix.identity(3)) == []


def test_kernel_single_parity():
    basis = right_kernel_basis(BitMatrix.from_rows([[1, 1]]))
    assert [v.mask for v in basis] == [0b11]


def test_kernel_of_stacked_example():
    basis = right_kernel_basis(stacked_gi())
    assert len(basis) == 2
    span = {0}
    for v in basis:
        span |= {s ^ v.mask for s in span}
    assert span == {0, 0b000111, 0b111000, 0b111111}


def test_kernel_vectors_annihilate():
    rng = random.Random(7)
    for _ in range(50):
        rows = [rng.getrandbits(8) for _ in range(4)]
        m = BitMatrix(rows, 8)
        basis = right_kernel_basis(m)
        assert len(basis) == 8 - rank(m)
        for v in basis:
            assert mat_vec(m, v).mask == 0
        if basis:
            stacked = BitMatrix([v.mask for v in basis], 8)
            assert rank(stacked) == len(basis)


def test_rref_idempotent_and_rank_consistent():
    rng = random.Random(11)
    for _ in range(100):
        rows = [rng.getrandbits(6) for _ in range(rng.randint(1, 6))]
        m = BitMatrix(rows, 6)
        r, pivots = rref(m)
        assert len(pivots) == rank(m) == rank(r)
        r2, pivots2 = rref(r)
        assert r2 == r and pivots2 == pivots


def test_solve_consistency_property():
    rng = random.Random(13)
    for _ in range(100):
        rows = [rng.getrandbits(5) for _ in range(3)]
        a = BitMatrix(rows, 5)
        b = BitVector(3, rng.getrandbits(3))
        x = solve(a, b)
        if x is not None:
            assert mat_vec(a, x) == b


def test_enumerate_invertible_k1():
    mats = list(enumerate_invertible(1))
    assert len(mats) == 1
    assert mats[0].to_lists() == [[1]]


def test_enumerate_invertible_k2_count():
    assert len(list(enumerate_invertible(2))) == 6 == gl2_order(2)


@pytest.mark.parametrize("k,count", [(1, 1), (2, 6), (3, 168), (4, 20160)])
def test_enumerate_invertible_counts_distinct_full_rank(k, count):
    seen = set()
    for m in enumerate_invertible(k):
        assert m.row_words not in seen
        seen.add(m.row_words)
        assert rank(m) == k
    assert len(seen) == count == gl2_order(k)


def test_enumerate_invertible_size_guard():
    with pytest.raises(SizeGuardError):
        list(enumerate_invertible(4, limit=100))


def test_enumerate_invertible_deterministic_lex_order():
    first = list(enumerate_invertible(2))

    def row_string(m):
        return "".join(
            "".join(str((w >> j) & 1) for j in range(m.cols))
            for w in m.row_words
        )

    strings = [row_string(m) for m in first]
    assert strings == sorted(strings)
    assert [m.row_words for m in enumerate_invertible(2)] == [
        m.row_words for m in first
    ]


def test_inverse_round_trip():
    rng = random.Random(3)
    for _ in range(20):
        while True:
            m = BitMatrix([rng.getrandbits(5) for _ in range(5)], 5)
            if rank(m) == 5:
                break
        assert mat_mul(m, inverse(m)) == BitMatrix.identity(5)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polydot_cmpc.blockmatrix import (
    BlockMatrix,
    assemble,
    block_matmul,
    dense_matmul,
    partition,
    read_matrix,
    transpose_blockwise,
    write_matrix,
)
from polydot_cmpc.errors import DimensionMismatchError, IndivisibleDimensionsError
from polydot_cmpc.field import FieldModulus

Q101 = FieldModulus(101)
RNG = np.random.default_rng(7)


def _rand(m, q=101):
    return np.asarray(RNG.integers(0, q, size=(m, m)), dtype=np.int64)


def test_partition_identity_splits_diagonally():
    bm = partition(np.eye(4, dtype=np.int64), 2, 2)
    assert np.array_equal(bm.blocks[0][0], np.eye(2, dtype=np.int64))
    assert np.array_equal(bm.blocks[0][1], np.zeros((2, 2), dtype=np.int64))
    assert np.array_equal(bm.blocks[1][1], np.eye(2, dtype=np.int64))


def test_partition_noop():
    m = _rand(3)
    bm = partition(m, 1, 1)
    assert bm.rows_blocks == bm.cols_blocks == 1
    assert np.array_equal(bm.blocks[0][0], m)


def test_partition_indivisible():
    with pytest.raises(IndivisibleDimensionsError):
        partition(_rand(6), 4, 2)


def test_transpose_of_identity_partition():
    bm = partition(np.eye(4, dtype=np.int64), 2, 2)
    assert np.array_equal(assemble(transpose_blockwise(bm)), np.eye(4, dtype=np.int64))


def test_transpose_is_involution():
    bm = partition(_rand(6), 2, 3)
    back = transpose_blockwise(transpose_blockwise(bm))
    assert np.array_equal(assemble(back), assemble(bm))


def test_transpose_shape_bookkeeping():
    # a 2x1 grid of 1x3 blocks becomes a 1x2 grid of 3x1 blocks
    blocks = [[np.array([[1, 2, 3]], dtype=np.int64)],
              [np.array([[4, 5, 6]], dtype=np.int64)]]
    out = transpose_blockwise(BlockMatrix(blocks))
    assert (out.rows_blocks, out.cols_blocks) == (1, 2)
    assert out.block_shape == (3, 1)


def test_transpose_matches_dense_transpose():
    m = _rand(6)
    assert np.array_equal(assemble(transpose_blockwise(partition(m, 2, 3))), m.T)


def test_block_matmul_identity():
    x = partition(_rand(4), 2, 2)
    i4 = partition(np.eye(4, dtype=np.int64), 2, 2)
    assert np.array_equal(assemble(block_matmul(x, i4, Q101)), assemble(x))


def test_block_matmul_scalar_blocks():
    x = BlockMatrix([[np.array([[3]], dtype=np.int64)]])
    y = BlockMatrix([[np.array([[5]], dtype=np.int64)]])
    out = block_matmul(x, y, FieldModulus(7))
    assert out.blocks[0][0][0, 0] == 1


def test_block_route_matches_dense_oracle():
    a, b = _rand(4), _rand(4)
    at_blocks = transpose_blockwise(partition(a, 2, 2))
    b_blocks = partition(b, 2, 2)
    got = assemble(block_matmul(at_blocks, b_blocks, Q101))
    assert np.array_equal(got, dense_matmul(a.T.copy(), b, Q101))


def test_block_matmul_dimension_mismatch():
    x = partition(_rand(4), 2, 2)
    y = partition(_rand(6), 3, 2)
    with pytest.raises(DimensionMismatchError):
        block_matmul(x, y, Q101)


@given(m=st.sampled_from([2, 4, 6, 12]), s=st.sampled_from([1, 2, 3]),
       t=st.sampled_from([1, 2]))
@settings(max_examples=25, deadline=None)
def test_assemble_partition_roundtrip(m, s, t):
    if m % s or m % t:
        return
    mat = np.asarray(np.random.default_rng(m * 7 + s).integers(0, 101, (m, m)),
                     dtype=np.int64)
    assert np.array_equal(assemble(partition(mat, s, t)), mat)


def test_assemble_zero_blocks():
    z = BlockMatrix([[np.zeros((2, 2), dtype=np.int64) for _ in range(2)]
                     for _ in range(2)])
    assert not assemble(z).any()


def test_matrix_io_roundtrip(tmp_path):
    m = _rand(4)
    path = tmp_path / "mat.txt"
    write_matrix(path, m, Q101)
    back, mod = read_matrix(path)
    assert mod == Q101
    assert np.array_equal(back, m)
    assert path.read_bytes().startswith(b"4 101\n")


def test_matrix_io_rejects_bad_entries(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("2 101\n1 2\n3 200\n")
    with pytest.raises(ValueError):
        read_matrix(path)

"""Block partitioning of square matrices over GF(q), plus the text format.

A BlockMatrix is a grid of equally sized dense int64 blocks.  Partitioning
an m x m matrix into s row-parts and t column-parts requires s | m and
t | m; assemble is the exact inverse.
"""

from dataclasses import dataclass

import numpy as np

from polydot_cmpc import backend
from polydot_cmpc.errors import DimensionMismatchError, IndivisibleDimensionsError
from polydot_cmpc.field import FieldModulus


@dataclass
class BlockMatrix:
    """A rows_blocks x cols_blocks grid of block_rows x block_cols matrices."""

    blocks: list  # blocks[i][j]: np.ndarray, shape (block_rows, block_cols)

    def __post_init__(self):
        if not self.blocks or not self.blocks[0]:
            raise ValueError("block grid must be non-empty")
        shape = self.blocks[0][0].shape
        widths = {len(row) for row in self.blocks}
        if len(widths) != 1:
            raise ValueError("ragged block grid")
        for row in self.blocks:
            for blk in row:
                if blk.shape != shape:
                    raise ValueError("blocks must share one shape")

    @property
    def rows_blocks(self) -> int:
        return len(self.blocks)

    @property
    def cols_blocks(self) -> int:
        return len(self.blocks[0])

    @property
    def block_shape(self) -> tuple[int, int]:
        return self.blocks[0][0].shape


def partition(matrix: np.ndarray, row_parts: int, col_parts: int) -> BlockMatrix:
    """Split an m x m matrix into a row_parts x col_parts block grid."""
    m, mc = matrix.shape
    if m != mc:
        raise DimensionMismatchError("matrix must be square")
    if m % row_parts or m % col_parts:
        raise IndivisibleDimensionsError(
            f"{row_parts} x {col_parts} does not divide an {m} x {m} matrix")
    br, bc = m // row_parts, m // col_parts
    blocks = [[np.ascontiguousarray(matrix[i * br:(i + 1) * br,
                                           j * bc:(j + 1) * bc])
               for j in range(col_parts)] for i in range(row_parts)]
    return BlockMatrix(blocks)


def transpose_blockwise(bm: BlockMatrix) -> BlockMatrix:
    """Block grid of the transposed matrix: output (i, j) = input (j, i)^T."""
    blocks = [[np.ascontiguousarray(bm.blocks[i][j].T)
               for i in range(bm.rows_blocks)] for j in range(bm.cols_blocks)]
    return BlockMatrix(blocks)


def block_matmul(x: BlockMatrix, y: BlockMatrix, modulus: FieldModulus) -> BlockMatrix:
    """Grid product Z[i][l] = sum_j X[i][j] Y[j][l] over GF(q)."""
    if x.cols_blocks != y.rows_blocks or x.block_shape[1] != y.block_shape[0]:
        raise DimensionMismatchError("inner block dimensions disagree")
    q = modulus.q
    out = []
    for i in range(x.rows_blocks):
        row = []
        for l in range(y.cols_blocks):
            acc = np.zeros((x.block_shape[0], y.block_shape[1]), dtype=np.int64)
            for j in range(x.cols_blocks):
                prod = backend.mod_matmul(x.blocks[i][j], y.blocks[j][l], q)
                acc = (acc + prod) % q
            row.append(acc)
        out.append(row)
    return BlockMatrix(out)


def assemble(bm: BlockMatrix) -> np.ndarray:
    """Inverse of partition: concatenate the grid back into one matrix."""
    return np.block([[blk for blk in row] for row in bm.blocks])


def dense_matmul(a: np.ndarray, b: np.ndarray, modulus: FieldModulus) -> np.ndarray:
    """Plain dense product mod q (the oracle for the block route)."""
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError("inner dimensions disagree")
    return backend.mod_matmul(a, b, modulus.q)


def write_matrix(path, matrix: np.ndarray, modulus: FieldModulus) -> None:
    """Text format: first line "m q", then m rows of base-10 residues."""
    m = matrix.shape[0]
    with open(path, "w", newline="\n") as fh:
        fh.write(f"{m} {modulus.q}\n")
        for row in matrix:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def read_matrix(path) -> tuple[np.ndarray, FieldModulus]:
    """Parse the text format; validates squareness and residue range."""
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise ValueError("first line must be 'm q'")
        m, q = int(header[0]), int(header[1])
        modulus = FieldModulus(q)
        rows = []
        for _ in range(m):
            row = [int(v) for v in fh.readline().split()]
            if len(row) != m:
                raise ValueError(f"expected {m} entries per row")
            if any(not 0 <= v < q for v in row):
                raise ValueError("entries must be residues in [0, q)")
            rows.append(row)
    return np.array(rows, dtype=np.int64), modulus

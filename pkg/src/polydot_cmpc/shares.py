"""Secret-share polynomials with matrix coefficients.

F_A places the blocks of A^T on the coded support and z fresh uniform
matrices on the secret support; F_B does the same for B.  Each share sent
to a worker is the polynomial evaluated at that worker's point.
"""

from dataclasses import dataclass

import numpy as np

from polydot_cmpc import powersets
from polydot_cmpc.blockmatrix import BlockMatrix
from polydot_cmpc.errors import ShapeMismatchError
from polydot_cmpc.field import FieldModulus
from polydot_cmpc.powersets import SchemeParams
from polydot_cmpc.rng import DeterministicStream


@dataclass
class SharePolynomial:
    """Sparse polynomial with matrix coefficients, split coded/secret."""

    coeffs: dict            # exponent -> np.ndarray block
    coded_support: frozenset
    secret_support: frozenset
    block_shape: tuple
    modulus: FieldModulus

    def __post_init__(self):
        if self.coded_support & self.secret_support:
            raise ValueError("coded and secret supports overlap")
        if set(self.coeffs) != self.coded_support | self.secret_support:
            raise ValueError("coefficients do not match the declared support")
        for blk in self.coeffs.values():
            if blk.shape != self.block_shape:
                raise ShapeMismatchError("coefficient block has wrong shape")

    @property
    def support(self) -> tuple:
        return tuple(sorted(self.coeffs))

    def degree(self) -> int:
        return max(self.coeffs)


def build_FA(a_transposed_blocks: BlockMatrix, params: SchemeParams,
             modulus: FieldModulus, seed: int) -> SharePolynomial:
    """Share polynomial of source 1.

    Expects the t x s block grid of A^T; block (i, j) lands on exponent
    i + t*j.  The z masks are drawn from the (seed, "A") stream.
    """
    t, s, z = params.t, params.s, params.z
    if (a_transposed_blocks.rows_blocks, a_transposed_blocks.cols_blocks) != (t, s):
        raise ShapeMismatchError(
            f"expected a {t} x {s} block grid of A^T, got "
            f"{a_transposed_blocks.rows_blocks} x {a_transposed_blocks.cols_blocks}")
    shape = a_transposed_blocks.block_shape
    coeffs = {}
    for i in range(t):
        for j in range(s):
            coeffs[i + t * j] = a_transposed_blocks.blocks[i][j]
    secret = powersets.p_SA(params)
    stream = DeterministicStream(seed, "A")
    for exp in sorted(secret):
        coeffs[exp] = stream.field_matrix(shape[0], shape[1], modulus.q)
    return SharePolynomial(coeffs=coeffs,
                           coded_support=powersets.p_CA(params),
                           secret_support=secret,
                           block_shape=shape, modulus=modulus)


def build_FB(b_blocks: BlockMatrix, params: SchemeParams,
             modulus: FieldModulus, seed: int) -> SharePolynomial:
    """Share polynomial of source 2.

    Expects the s x t block grid of B; block (k, l) lands on exponent
    t*(s-1-k) + theta*l.  Masks come from the (seed, "B") stream.
    """
    t, s, z = params.t, params.s, params.z
    if (b_blocks.rows_blocks, b_blocks.cols_blocks) != (s, t):
        raise ShapeMismatchError(
            f"expected an {s} x {t} block grid of B, got "
            f"{b_blocks.rows_blocks} x {b_blocks.cols_blocks}")
    shape = b_blocks.block_shape
    th = params.theta
    coeffs = {}
    for k in range(s):
        for l in range(t):
            coeffs[t * (s - 1 - k) + th * l] = b_blocks.blocks[k][l]
    secret = powersets.p_SB(params)
    stream = DeterministicStream(seed, "B")
    for exp in sorted(secret):
        coeffs[exp] = stream.field_matrix(shape[0], shape[1], modulus.q)
    return SharePolynomial(coeffs=coeffs,
                           coded_support=powersets.p_CB(params),
                           secret_support=secret,
                           block_shape=shape, modulus=modulus)


def evaluate_share(poly: SharePolynomial, x: int) -> np.ndarray:
    """Sum of coeff * x**exponent over the support; x must be nonzero."""
    q = poly.modulus.q
    if x % q == 0:
        raise ValueError("shares are only evaluated at nonzero points")
    acc = np.zeros(poly.block_shape, dtype=object)
    for exp, blk in poly.coeffs.items():
        acc += blk.astype(object) * pow(x, exp, q)
    return (acc % q).astype(np.int64)


def multiply_share_polynomials(fa: SharePolynomial, fb: SharePolynomial) -> dict:
    """Full symbolic product F_A * F_B: exponent -> matrix coefficient.

    Quadratic in the support sizes; used as the small-scale oracle for the
    worker-side evaluations and the important-power coefficients.
    """
    q = fa.modulus.q
    out: dict[int, np.ndarray] = {}
    for ea, ca in fa.coeffs.items():
        ca_obj = ca.astype(object)
        for eb, cb in fb.coeffs.items():
            prod = ca_obj.dot(cb.astype(object)) % q
            key = ea + eb
            if key in out:
                out[key] = (out[key] + prod) % q
            else:
                out[key] = prod
    return {e: m.astype(np.int64) for e, m in out.items()}

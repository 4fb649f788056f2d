"""Exact arithmetic over a configurable prime field GF(q).

Field elements are canonical Python/NumPy integers in [0, q).  The heavy
dense operations (generalized Vandermonde solves, power tables) go through
the kernel backend; everything here is bookkeeping plus the scalar ops.
"""

from dataclasses import dataclass

import numpy as np

from polydot_cmpc import backend
from polydot_cmpc.errors import (
    LengthMismatchError,
    SingularMatrixError,
    TargetNotInSupportError,
    ZeroInverseError,
)

MERSENNE61 = (1 << 61) - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (the fixed witness set covers n < 3.3e24)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldModulus:
    """A prime modulus q; all protocol arithmetic is done mod q."""

    q: int = MERSENNE61

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"{self.q} is not prime")
        if self.q >= 1 << 62:
            raise ValueError("modulus must fit below 2^62 for the kernels")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def inv(self, a: int) -> int:
        return fp_inv(a, self)

    def contains(self, a: int) -> bool:
        return 0 <= a < self.q


DEFAULT_MODULUS = FieldModulus()


@dataclass(frozen=True)
class EvaluationPoints:
    """The per-worker evaluation points: pairwise distinct and nonzero."""

    alphas: tuple
    modulus: FieldModulus = DEFAULT_MODULUS

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        q = self.modulus.q
        if any(not 0 < a < q for a in self.alphas):
            raise ValueError("evaluation points must be nonzero residues")
        if len(set(self.alphas)) != len(self.alphas):
            raise ValueError("evaluation points must be pairwise distinct")

    def __len__(self):
        return len(self.alphas)

    def __iter__(self):
        return iter(self.alphas)


def fp_inv(a: int, modulus: FieldModulus) -> int:
    """Multiplicative inverse via Fermat's little theorem."""
    a %= modulus.q
    if a == 0:
        raise ZeroInverseError("zero has no inverse")
    return pow(a, modulus.q - 2, modulus.q)


def eval_sparse(support, coeffs, x: int, modulus: FieldModulus) -> int:
    """Evaluate sum_k coeffs[k] * x**support[k] mod q."""
    support = list(support)
    coeffs = list(coeffs)
    if len(support) != len(coeffs):
        raise LengthMismatchError("support and coefficients differ in length")
    q = modulus.q
    return sum(c * pow(x, e, q) for e, c in zip(support, coeffs)) % q


def vandermonde_matrix(points: EvaluationPoints, support) -> np.ndarray:
    """V[n, k] = alpha_n ** support[k] as an int64 matrix."""
    exps = np.array(sorted(support), dtype=np.int64)
    pts = np.array(list(points), dtype=np.int64)
    return backend.power_matrix(pts, exps, points.modulus.q)


def vandermonde_solve(points: EvaluationPoints, support, values) -> list[int]:
    """Recover sparse-polynomial coefficients from point evaluations.

    Solves the square system V c = values with V[n, k] = alpha_n^{e_k},
    exponents taken in ascending order.  Over a finite field a generalized
    Vandermonde matrix can be singular; that surfaces as SingularMatrixError.
    """
    support = sorted(support)
    values = list(values)
    if not (len(points) == len(support) == len(values)):
        raise LengthMismatchError("points, support, and values must align")
    v = vandermonde_matrix(points, support)
    rhs = np.array(values, dtype=np.int64)
    sol = backend.solve_mod(v, rhs, points.modulus.q)
    if sol is None:
        raise SingularMatrixError("generalized Vandermonde system is singular")
    return [int(c) for c in sol]


def extraction_rows(points: EvaluationPoints, support, targets) -> np.ndarray:
    """Rows of V^{-1} for the given target exponents, stacked per target.

    Row r satisfies sum_n r[n] * P(alpha_n) = coeff(P, target) for every
    polynomial P supported on `support`; these are the worker combination
    scalars of the reconstruction step.
    """
    support = sorted(support)
    index = {e: i for i, e in enumerate(support)}
    missing = [t for t in targets if t not in index]
    if missing:
        raise TargetNotInSupportError(f"targets {missing} not in support")
    if len(points) != len(support):
        raise LengthMismatchError("need exactly one point per support exponent")
    v = vandermonde_matrix(points, support)
    q = points.modulus.q
    rhs = np.zeros((len(support), len(targets)), dtype=np.int64)
    for col, t in enumerate(targets):
        rhs[index[t], col] = 1
    sol = backend.solve_mod(v.T.copy(), rhs, q)
    if sol is None:
        raise SingularMatrixError("generalized Vandermonde system is singular")
    return np.ascontiguousarray(sol.T)


def extraction_vector(points: EvaluationPoints, support, target: int) -> list[int]:
    """The single V^{-1} row selecting the coefficient of x**target."""
    row = extraction_rows(points, support, [target])[0]
    return [int(r) for r in row]

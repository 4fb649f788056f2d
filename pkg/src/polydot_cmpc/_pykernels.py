"""Pure-Python fallback for the compiled kernels.

Same signatures and bit-identical results as ``_kernels`` (exact field
arithmetic has a single correct answer); only the speed differs.  Python
ints carry the 122-bit intermediate products.
"""

import numpy as np


def _rows(a):
    arr = np.asarray(a, dtype=np.int64)
    return arr, [[int(v) for v in row] for row in arr]


def mod_matmul(a, b, q):
    """C = A @ B mod q for int64 matrices."""
    _, al = _rows(a)
    _, bl = _rows(b)
    n, k = len(al), len(al[0]) if al else 0
    if len(bl) != k:
        raise ValueError("inner dimensions disagree")
    bt = list(zip(*bl))
    out = [[sum(x * y for x, y in zip(row, col)) % q for col in bt] for row in al]
    return np.array(out, dtype=np.int64).reshape(n, len(bt))


def mod_mul_elemwise(a, b, q):
    """Elementwise a*b mod q for same-shape int64 arrays."""
    aa = np.asarray(a, dtype=np.int64)
    bb = np.asarray(b, dtype=np.int64)
    if aa.shape != bb.shape:
        raise ValueError("shapes disagree")
    flat = [(int(x) * int(y)) % q for x, y in zip(aa.ravel(), bb.ravel())]
    return np.array(flat, dtype=np.int64).reshape(aa.shape)


def power_matrix(points, exponents, q):
    """P[i, j] = points[i] ** exponents[j] mod q."""
    pts = [int(p) for p in np.asarray(points, dtype=np.int64)]
    exps = [int(e) for e in np.asarray(exponents, dtype=np.int64)]
    out = [[pow(p, e, q) for e in exps] for p in pts]
    return np.array(out, dtype=np.int64).reshape(len(pts), len(exps))


def sum_mod_axis0(x, q):
    """Column sums mod q of a 2-D int64 array."""
    arr = np.asarray(x, dtype=np.int64)
    cols = [int(sum(int(v) for v in arr[:, j])) % q for j in range(arr.shape[1])]
    return np.array(cols, dtype=np.int64)


def solve_mod(a, b, q):
    """Solve A @ X = B over GF(q); returns X or None when A is singular."""
    _, al = _rows(a)
    n = len(al)
    if n and len(al[0]) != n:
        raise ValueError("matrix must be square")
    barr = np.asarray(b, dtype=np.int64)
    squeeze = barr.ndim == 1
    if squeeze:
        barr = barr[:, None]
    if barr.shape[0] != n:
        raise ValueError("right-hand side has wrong length")
    k = barr.shape[1]
    work = [al[i] + [int(v) for v in barr[i]] for i in range(n)]

    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] % q != 0), None)
        if piv is None:
            return None
        if piv != col:
            work[col], work[piv] = work[piv], work[col]
        inv = pow(work[col][col] % q, q - 2, q)
        work[col] = [(v * inv) % q for v in work[col]]
        for row in range(col + 1, n):
            factor = work[row][col] % q
            if factor:
                work[row] = [(v - factor * p) % q
                             for v, p in zip(work[row], work[col])]

    x = [[0] * k for _ in range(n)]
    for i in range(n - 1, -1, -1):
        for l in range(k):
            s = sum(work[i][j] * x[j][l] for j in range(i + 1, n)) % q
            x[i][l] = (work[i][n + l] - s) % q
    out = np.array(x, dtype=np.int64).reshape(n, k)
    return out[:, 0] if squeeze else out

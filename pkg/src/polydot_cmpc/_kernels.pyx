# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(q) kernels: matmul, dense solve, power tables, column sums.

Values are canonical residues stored as int64; q must stay below 2^62 so a
product fits in 128 bits.  The Mersenne prime 2^61-1 gets a shift-based
reduction; any other modulus uses generic 128-bit remainder.
"""

import numpy as np

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

cdef u64 M61 = (<u64>1 << 61) - 1


cdef inline u64 _mulmod(u64 a, u64 b, u64 q) nogil:
    cdef u128 prod = (<u128>a) * b
    cdef u64 r
    if q == M61:
        r = <u64>((prod >> 61) + (prod & M61))
        if r >= M61:
            r -= M61
        return r
    return <u64>(prod % q)


cdef inline u64 _powmod(u64 base, u64 exp, u64 q) nogil:
    cdef u64 acc = 1 % q
    cdef u64 b = base % q
    while exp:
        if exp & 1:
            acc = _mulmod(acc, b, q)
        b = _mulmod(b, b, q)
        exp >>= 1
    return acc


cdef inline u64 _invmod(u64 a, u64 q) nogil:
    return _powmod(a, q - 2, q)


def mod_matmul(a, b, q):
    """C = A @ B mod q for int64 matrices."""
    cdef long long[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef long long[:, ::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    cdef Py_ssize_t n = av.shape[0], k = av.shape[1], m = bv.shape[1]
    if bv.shape[0] != k:
        raise ValueError("inner dimensions disagree")
    out = np.zeros((n, m), dtype=np.int64)
    cdef long long[:, ::1] ov = out
    cdef u64 qq = <u64>q
    cdef Py_ssize_t i, j, l
    cdef u128 acc
    cdef u64 aval
    with nogil:
        for i in range(n):
            for j in range(m):
                acc = 0
                for l in range(k):
                    acc += _mulmod(<u64>av[i, l], <u64>bv[l, j], qq)
                ov[i, j] = <long long>(acc % qq)
    return out


def mod_mul_elemwise(a, b, q):
    """Elementwise a*b mod q for same-shape int64 arrays."""
    aa = np.ascontiguousarray(a, dtype=np.int64).ravel()
    bb = np.ascontiguousarray(b, dtype=np.int64).ravel()
    if aa.shape[0] != bb.shape[0]:
        raise ValueError("shapes disagree")
    out = np.empty_like(aa)
    cdef long long[::1] av = aa, bv = bb, ov = out
    cdef u64 qq = <u64>q
    cdef Py_ssize_t i, n = av.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = <long long>_mulmod(<u64>av[i], <u64>bv[i], qq)
    return out.reshape(np.asarray(a).shape)


def power_matrix(points, exponents, q):
    """P[i, j] = points[i] ** exponents[j] mod q."""
    cdef long long[::1] pv = np.ascontiguousarray(points, dtype=np.int64)
    cdef long long[::1] ev = np.ascontiguousarray(exponents, dtype=np.int64)
    cdef Py_ssize_t n = pv.shape[0], k = ev.shape[0]
    out = np.empty((n, k), dtype=np.int64)
    cdef long long[:, ::1] ov = out
    cdef u64 qq = <u64>q
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(n):
            for j in range(k):
                ov[i, j] = <long long>_powmod(<u64>pv[i], <u64>ev[j], qq)
    return out


def sum_mod_axis0(x, q):
    """Column sums mod q of a 2-D int64 array."""
    cdef long long[:, ::1] xv = np.ascontiguousarray(x, dtype=np.int64)
    cdef Py_ssize_t r = xv.shape[0], c = xv.shape[1]
    acc = np.zeros(c, dtype=np.int64)
    cdef long long[::1] av = acc
    cdef u64 qq = <u64>q
    cdef Py_ssize_t i, j
    cdef u128 s
    with nogil:
        for j in range(c):
            s = 0
            for i in range(r):
                s += <u64>xv[i, j]
            av[j] = <long long>(s % qq)
    return acc


def solve_mod(a, b, q):
    """Solve A @ X = B over GF(q); returns X or None when A is singular.

    Forward elimination with first-nonzero pivoting, then back substitution.
    """
    cdef long long[:, ::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef Py_ssize_t n = av.shape[0]
    if av.shape[1] != n:
        raise ValueError("matrix must be square")
    barr = np.ascontiguousarray(b, dtype=np.int64)
    squeeze = barr.ndim == 1
    if squeeze:
        barr = barr[:, None]
    if barr.shape[0] != n:
        raise ValueError("right-hand side has wrong length")
    cdef Py_ssize_t k = barr.shape[1]

    work = np.empty((n, n + k), dtype=np.int64)
    work[:, :n] = np.asarray(a, dtype=np.int64)
    work[:, n:] = barr
    cdef long long[:, ::1] wv = work
    cdef u64 qq = <u64>q
    cdef Py_ssize_t col, row, piv, j
    cdef u64 inv, factor, v
    cdef int singular = 0

    with nogil:
        for col in range(n):
            piv = -1
            for row in range(col, n):
                if wv[row, col] % qq != 0:
                    piv = row
                    break
            if piv < 0:
                singular = 1
                break
            if piv != col:
                for j in range(col, n + k):
                    v = <u64>wv[col, j]
                    wv[col, j] = wv[piv, j]
                    wv[piv, j] = <long long>v
            inv = _invmod(<u64>wv[col, col] % qq, qq)
            for j in range(col, n + k):
                wv[col, j] = <long long>_mulmod(<u64>wv[col, j], inv, qq)
            for row in range(col + 1, n):
                factor = <u64>wv[row, col] % qq
                if factor == 0:
                    continue
                for j in range(col, n + k):
                    v = _mulmod(factor, <u64>wv[col, j], qq)
                    wv[row, j] = <long long>((<u64>wv[row, j] + qq - v) % qq)
    if singular:
        return None

    x = np.zeros((n, k), dtype=np.int64)
    cdef long long[:, ::1] xv = x
    cdef Py_ssize_t i, l
    cdef u128 s
    with nogil:
        for i in range(n - 1, -1, -1):
            for l in range(k):
                s = 0
                for j in range(i + 1, n):
                    s += _mulmod(<u64>wv[i, j], <u64>xv[j, l], qq)
                v = <u64>(s % qq)
                xv[i, l] = <long long>((<u64>wv[i, n + l] + qq - v) % qq)
    return x[:, 0] if squeeze else x

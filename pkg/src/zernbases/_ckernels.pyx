# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled three-term recurrences.

Every family is written as ``p_k = (A_k x + B_k) p_{k-1} - C_k p_{k-2}`` with
the coefficients tabulated once per call.  Points are swept in small blocks so
the inner loop over points vectorizes and the block stays in cache.

Same contract as ``_pykernels``: float64 array of any shape in, same shape out.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef enum:
    BLOCK = 256


cdef void _sweep(int n, const double[::1] A, const double[::1] B, const double[::1] C,
                 const double[::1] xv, double[::1] ov) noexcept nogil:
    # A[1], B[1] give p_1; C[1] is unused
    cdef double p0[BLOCK]
    cdef double p1[BLOCK]
    cdef double p2, a, b, c
    cdef Py_ssize_t start, i, m, total = xv.shape[0]
    cdef int k
    start = 0
    while start < total:
        m = total - start
        if m > BLOCK:
            m = BLOCK
        if n == 0:
            for i in range(m):
                ov[start + i] = 1.0
        else:
            a = A[1]
            b = B[1]
            for i in range(m):
                p0[i] = 1.0
                p1[i] = a * xv[start + i] + b
            for k in range(2, n + 1):
                a = A[k]
                b = B[k]
                c = C[k]
                for i in range(m):
                    p2 = (a * xv[start + i] + b) * p1[i] - c * p0[i]
                    p0[i] = p1[i]
                    p1[i] = p2
            for i in range(m):
                ov[start + i] = p1[i]
        start += m


cdef object _run(int n, A, B, C, x):
    arr = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty_like(arr)
    cdef const double[::1] xv = arr.reshape(-1)
    cdef double[::1] ov = out.reshape(-1)
    cdef const double[::1] av = A
    cdef const double[::1] bv = B
    cdef const double[::1] cv = C
    with nogil:
        _sweep(n, av, bv, cv, xv, ov)
    # ascontiguousarray promotes 0-d input to 1-d
    return out.reshape(np.shape(x))


cdef tuple _tables(int n):
    size = max(n + 1, 2)
    return np.zeros(size), np.zeros(size), np.zeros(size)


def jacobi(int n, int a, int b, x):
    A, B, C = _tables(n)
    A[1] = (a + b + 2) / 2.0
    B[1] = (a - b) / 2.0
    cdef int k
    cdef double s, c1
    for k in range(2, n + 1):
        s = 2.0 * k + a + b
        c1 = 2.0 * k * (k + a + b) * (s - 2.0)
        A[k] = (s - 1.0) * s * (s - 2.0) / c1
        B[k] = (s - 1.0) * (a * a - b * b) / c1
        C[k] = 2.0 * (k + a - 1) * (k + b - 1) * s / c1
    return _run(n, A, B, C, x)


def gegenbauer(int n, int lam, x):
    A, B, C = _tables(n)
    A[1] = 2.0 * lam
    cdef int k
    for k in range(2, n + 1):
        A[k] = 2.0 * (k + lam - 1) / k
        C[k] = (k + 2.0 * lam - 2.0) / k
    return _run(n, A, B, C, x)


def legendre(int n, x):
    A, B, C = _tables(n)
    A[1] = 1.0
    cdef int k
    for k in range(2, n + 1):
        A[k] = (2.0 * k - 1.0) / k
        C[k] = (k - 1.0) / k
    return _run(n, A, B, C, x)


def chebyshev_u(int n, x):
    A, B, C = _tables(n)
    A[:] = 2.0
    C[:] = 1.0
    return _run(n, A, B, C, x)

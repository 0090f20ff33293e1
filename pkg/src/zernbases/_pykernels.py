"""Pure numpy three-term recurrences; the fallback for ``_ckernels``.

Both backends use ``p_k = (A_k x + B_k) p_{k-1} - C_k p_{k-2}`` with the same
coefficient tables, so they round identically up to compiler contraction.
All functions take a float64 array of any shape and return a new array of
the same shape.
"""
import numpy as np


def _sweep(n, A, B, C, x):
    x = np.asarray(x, dtype=np.float64)
    p0 = np.ones_like(x)
    if n == 0:
        return p0
    p1 = A[1] * x + B[1]
    for k in range(2, n + 1):
        p0, p1 = p1, (A[k] * x + B[k]) * p1 - C[k] * p0
    return p1


def _tables(n):
    size = max(n + 1, 2)
    return [0.0] * size, [0.0] * size, [0.0] * size


def jacobi(n, a, b, x):
    A, B, C = _tables(n)
    A[1], B[1] = (a + b + 2) / 2.0, (a - b) / 2.0
    for k in range(2, n + 1):
        s = 2.0 * k + a + b
        c1 = 2.0 * k * (k + a + b) * (s - 2.0)
        A[k] = (s - 1.0) * s * (s - 2.0) / c1
        B[k] = (s - 1.0) * (a * a - b * b) / c1
        C[k] = 2.0 * (k + a - 1) * (k + b - 1) * s / c1
    return _sweep(n, A, B, C, x)


def gegenbauer(n, lam, x):
    A, B, C = _tables(n)
    A[1] = 2.0 * lam
    for k in range(2, n + 1):
        A[k] = 2.0 * (k + lam - 1) / k
        C[k] = (k + 2.0 * lam - 2.0) / k
    return _sweep(n, A, B, C, x)


def legendre(n, x):
    A, B, C = _tables(n)
    A[1] = 1.0
    for k in range(2, n + 1):
        A[k] = (2.0 * k - 1.0) / k
        C[k] = (k - 1.0) / k
    return _sweep(n, A, B, C, x)


def chebyshev_u(n, x):
    A, B, C = _tables(n)
    A, C = [2.0] * len(A), [1.0] * len(C)
    return _sweep(n, A, B, C, x)

"""Jacobi, Gegenbauer, Legendre and Chebyshev-U polynomials by forward recurrence.

Each evaluator works in one of three modes, chosen from the type of ``x``:

* exact: ``int``, :class:`~fractions.Fraction`, or any exact ring element that
  supports ``+``, ``-`` and multiplication by a Fraction (for instance a
  :class:`~zernbases.poly2d.BivariatePoly`, which yields the polynomial itself);
* scalar float: a Python ``float``;
* array: a numpy array, evaluated by the compiled or numpy kernels.

Only the integer parameters needed for the disk bases are supported:
Jacobi ``a, b >= 0`` and Gegenbauer ``lam >= 1``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Integral

import numpy as np

from . import kernels


def _check_degree(n):
    if not isinstance(n, Integral) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")


def _mode(x):
    if isinstance(x, np.ndarray):
        return "array"
    if isinstance(x, (float, np.floating)):
        return "float"
    return "exact"


def _exact(x):
    return Fraction(x) if isinstance(x, Integral) else x


def _scale(v, num, den, mode):
    """``v * num / den`` staying exact outside float mode."""
    if mode == "float":
        return v * num / den
    return v * Fraction(num, den)


def _recur(n, x, mode, p1_of, step):
    one = 1.0 if mode == "float" else Fraction(1)
    if n == 0:
        return one if not hasattr(x, "one") else x.one()
    p0 = one if not hasattr(x, "one") else x.one()
    p1 = p1_of(x)
    for k in range(2, n + 1):
        p0, p1 = p1, step(k, x, p1, p0)
    return p1


def jacobi_eval(n, a, b, x):
    """Jacobi polynomial ``P_n^(a,b)(x)``."""
    _check_degree(n)
    if a < 0 or b < 0:
        raise ValueError("Jacobi parameters must be nonnegative integers")
    mode = _mode(x)
    if mode == "array":
        return kernels.jacobi(n, a, b, x)
    if mode == "exact":
        x = _exact(x)

    def p1_of(t):
        return _scale(t, a + b + 2, 2, mode) + _scale(1, 2 * a + 2 - (a + b + 2), 2, mode)

    def step(k, t, p1, p0):
        s = 2 * k + a + b
        c1 = 2 * k * (k + a + b) * (s - 2)
        lin = _scale(t, (s - 1) * s * (s - 2), 1, mode) + (s - 1) * (a * a - b * b)
        return _scale(lin * p1, 1, c1, mode) - _scale(p0, 2 * (k + a - 1) * (k + b - 1) * s, c1, mode)

    return _recur(n, x, mode, p1_of, step)


def gegenbauer_eval(n, lam, x):
    """Gegenbauer polynomial ``C_n^lam(x)`` for integer ``lam >= 1``."""
    _check_degree(n)
    if lam < 1:
        raise ValueError("Gegenbauer parameter must be an integer >= 1")
    mode = _mode(x)
    if mode == "array":
        return kernels.gegenbauer(n, lam, x)
    if mode == "exact":
        x = _exact(x)

    def step(k, t, p1, p0):
        return _scale(t * p1, 2 * (k + lam - 1), k, mode) - _scale(p0, k + 2 * lam - 2, k, mode)

    return _recur(n, x, mode, lambda t: _scale(t, 2 * lam, 1, mode), step)


def legendre_eval(n, x):
    """Legendre polynomial ``P_n(x)``."""
    _check_degree(n)
    mode = _mode(x)
    if mode == "array":
        return kernels.legendre(n, x)
    if mode == "exact":
        x = _exact(x)

    def step(k, t, p1, p0):
        return _scale(t * p1, 2 * k - 1, k, mode) - _scale(p0, k - 1, k, mode)

    return _recur(n, x, mode, lambda t: t, step)


def chebyshev_u_eval(n, x):
    """Chebyshev polynomial of the second kind ``U_n(x)``."""
    _check_degree(n)
    mode = _mode(x)
    if mode == "array":
        return kernels.chebyshev_u(n, x)
    if mode == "exact":
        x = _exact(x)

    def step(k, t, p1, p0):
        return _scale(t * p1, 2, 1, mode) - p0

    return _recur(n, x, mode, lambda t: _scale(t, 2, 1, mode), step)

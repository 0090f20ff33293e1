"""Recurrence evaluators against explicit finite-sum definitions."""
import random
from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest

from zernbases.special_poly import chebyshev_u_eval, gegenbauer_eval, jacobi_eval, legendre_eval


def poch(a, k):
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def jacobi_sum(n, a, b, x):
    x = Fraction(x)
    return sum(
        comb(n + a, n - s) * comb(n + b, s) * ((x - 1) / 2) ** s * ((x + 1) / 2) ** (n - s)
        for s in range(n + 1)
    )


def gegenbauer_sum(n, lam, x):
    x = Fraction(x)
    return sum(
        (-1) ** k * poch(lam, n - k) / (factorial(k) * factorial(n - 2 * k)) * (2 * x) ** (n - 2 * k)
        for k in range(n // 2 + 1)
    )


def legendre_sum(n, x):
    x = Fraction(x)
    return Fraction(1, 2**n) * sum(comb(n, k) ** 2 * (x - 1) ** (n - k) * (x + 1) ** k for k in range(n + 1))


def cheb_u_sum(n, x):
    x = Fraction(x)
    return sum((-1) ** k * comb(n - k, k) * (2 * x) ** (n - 2 * k) for k in range(n // 2 + 1))


def _rand_rationals(seed, count=10):
    rng = random.Random(seed)
    return [Fraction(rng.randint(-97, 97), rng.randint(1, 97)) for _ in range(count)]


@pytest.mark.parametrize(
    "args, expected",
    [((0, 3, 0, 0.4), 1), ((1, 1, 0, -1), -1), ((1, 1, 0, 0), Fraction(1, 2))],
)
def test_jacobi_examples(args, expected):
    assert jacobi_eval(*args) == expected


@pytest.mark.parametrize(
    "args, expected",
    [((0, 2, 0.9), 1), ((1, 2, Fraction(1, 2)), 2), ((2, 1, 1), 3)],
)
def test_gegenbauer_examples(args, expected):
    assert gegenbauer_eval(*args) == expected


@pytest.mark.parametrize("args, expected", [((5, 1), 1), ((1, 0.3), 0.3), ((2, 0), Fraction(-1, 2))])
def test_legendre_examples(args, expected):
    assert legendre_eval(*args) == expected


@pytest.mark.parametrize("args, expected", [((0, 0.7), 1), ((1, Fraction(1, 2)), 1), ((3, 1), 4)])
def test_chebyshev_examples(args, expected):
    assert chebyshev_u_eval(*args) == expected


@pytest.mark.parametrize("n", range(0, 16))
def test_exact_against_explicit_sums(n):
    for x in _rand_rationals(n, 4):
        for a in range(4):
            assert jacobi_eval(n, a, 0, x) == jacobi_sum(n, a, 0, x)
        assert jacobi_eval(n, 2, 3, x) == jacobi_sum(n, 2, 3, x)
        for lam in (1, 2, 5):
            assert gegenbauer_eval(n, lam, x) == gegenbauer_sum(n, lam, x)
        assert legendre_eval(n, x) == legendre_sum(n, x)
        assert chebyshev_u_eval(n, x) == cheb_u_sum(n, x)


@pytest.mark.parametrize("n", range(21))
def test_cross_family_consistency(n):
    for x in _rand_rationals(1000 + n):
        assert legendre_eval(n, x) == jacobi_eval(n, 0, 0, x)
        assert chebyshev_u_eval(n, x) == gegenbauer_eval(n, 1, x)


@pytest.mark.parametrize("n", range(21))
def test_endpoint_identities(n):
    for a in range(5):
        assert jacobi_eval(n, a, 0, -1) == (-1) ** n
    assert legendre_eval(n, 1) == 1
    for lam in range(1, 6):
        assert gegenbauer_eval(n, lam, 1) == comb(n + 2 * lam - 1, n)


def _rel_close(f, e, tol=1e-12):
    e = float(e)
    return abs(f - e) <= tol * max(1.0, abs(e))


@pytest.mark.parametrize("n", [0, 1, 2, 5, 10, 17, 24, 30])
def test_float_scalar_and_array_match_exact(n):
    xs = [Fraction(k - 50, 50) for k in range(101)]
    arr = np.array([float(x) for x in xs])
    cases = [
        (lambda x: jacobi_eval(n, 3, 0, x)),
        (lambda x: gegenbauer_eval(n, 4, x)),
        (lambda x: legendre_eval(n, x)),
        (lambda x: chebyshev_u_eval(n, x)),
    ]
    for fn in cases:
        exact = [fn(x) for x in xs]
        vec = fn(arr)
        for x, e, v in zip(xs, exact, vec):
            assert _rel_close(fn(float(x)), e)
            assert _rel_close(float(v), e)


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        jacobi_eval(-1, 0, 0, 0.5)
    with pytest.raises(ValueError):
        gegenbauer_eval(2, 0, 0.5)
    with pytest.raises(ValueError):
        jacobi_eval(2, -1, 0, 0.5)

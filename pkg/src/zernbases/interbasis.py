"""Exact Clebsch-Gordan coefficients and the interbasis matrices ``W_(n)``.

Within rung ``n`` the half-sphere functions of the two bases are related by

    Upsilon^II_{n1,n2} = sum_m W^{n,m}_{n1,n2} Upsilon^I_{n,m},
    W^{n,m}_{n1,n2} = i^n1 (-1)^((m+|m|)/2) C^{n1,0}_{n/2,-m/2; n/2,m/2}.

The special coefficient ``C^{n1,0}_{n/2,-m/2;n/2,m/2}`` is computed two
independent ways: the general Racah single sum (:func:`cgc`) and a terminating
``3F2`` at unit argument (:func:`special_cgc`).

Angular momenta are stored doubled so half-integers stay integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact_num import (
    ExactComplex,
    QuarterPhase,
    RadicalSum,
    SignedSqrtRational,
    factorial,
    inv_factorial,
    ssr_sum_of_squares,
)


class HypergeometricPoleError(ZeroDivisionError):
    """A denominator Pochhammer symbol vanished before the series terminated."""


@dataclass(frozen=True)
class AngularMomentum:
    """``(j, m)`` stored as ``(2j, 2m)``."""

    twice_j: int
    twice_m: int

    def __post_init__(self):
        if self.twice_j < 0:
            raise ValueError(f"2j must be nonnegative, got {self.twice_j}")
        if abs(self.twice_m) > self.twice_j or (self.twice_j + self.twice_m) % 2:
            raise ValueError(f"invalid projection 2m={self.twice_m} for 2j={self.twice_j}")

    @classmethod
    def of(cls, j, m) -> "AngularMomentum":
        """Build from (possibly half-integer) ``j, m`` given as int/Fraction/float."""
        tj, tm = Fraction(j) * 2, Fraction(m) * 2
        if tj.denominator != 1 or tm.denominator != 1:
            raise ValueError(f"j={j}, m={m} are not integers or half-integers")
        return cls(int(tj), int(tm))


def cgc(j1m1: AngularMomentum, j2m2: AngularMomentum, jm: AngularMomentum) -> SignedSqrtRational:
    """``<j1 m1; j2 m2 | j m>`` with the Condon-Shortley phase (Racah formula)."""
    tj1, tm1 = j1m1.twice_j, j1m1.twice_m
    tj2, tm2 = j2m2.twice_j, j2m2.twice_m
    tj, tm = jm.twice_j, jm.twice_m
    if tm1 + tm2 != tm:
        return SignedSqrtRational.zero()
    if tj < abs(tj1 - tj2) or tj > tj1 + tj2 or (tj1 + tj2 + tj) % 2:
        return SignedSqrtRational.zero()

    def h(v):  # halve an even doubled quantity
        return v // 2

    a = h(tj1 + tj2 - tj)
    b = h(tj1 - tm1)
    c = h(tj2 + tm2)
    d = h(tj - tj2 + tm1)
    e = h(tj - tj1 - tm2)
    radicand = Fraction(
        (tj + 1)
        * factorial(h(tj + tj1 - tj2))
        * factorial(h(tj - tj1 + tj2))
        * factorial(a),
        factorial(h(tj1 + tj2 + tj) + 1),
    )
    radicand *= (
        factorial(h(tj + tm))
        * factorial(h(tj - tm))
        * factorial(h(tj1 - tm1))
        * factorial(h(tj1 + tm1))
        * factorial(h(tj2 - tm2))
        * factorial(h(tj2 + tm2))
    )
    total = Fraction(0)
    for k in range(max(0, -d, -e), min(a, b, c) + 1):
        denom = (
            factorial(k)
            * factorial(a - k)
            * factorial(b - k)
            * factorial(c - k)
            * factorial(d + k)
            * factorial(e + k)
        )
        total += Fraction((-1) ** k, denom)
    return SignedSqrtRational.from_parts(total, radicand)


def _terms(a, b, c, d, e, regularize_e):
    a, b, c, d, e = (Fraction(v) for v in (a, b, c, d, e))
    if a.denominator != 1 or a > 0:
        raise ValueError("first numerator parameter must be a nonpositive integer")
    if regularize_e and e.denominator != 1:
        raise ValueError("regularized form needs an integer second denominator")
    total = Fraction(0)
    num = Fraction(1)  # (a)_k (b)_k (c)_k / k!
    den = Fraction(1)  # (d)_k, and (e)_k unless regularized
    for k in range(int(-a) + 1):
        if num == 0:
            break
        if regularize_e:
            total += num / den * inv_factorial(int(e) + k - 1)
        else:
            if den == 0:
                raise HypergeometricPoleError(f"denominator vanishes at term k={k}")
            total += num / den
        num *= (a + k) * (b + k) * (c + k) / (k + 1)
        den *= (d + k) if regularize_e else (d + k) * (e + k)
        if den == 0 and num != 0:
            raise HypergeometricPoleError(f"denominator vanishes at term k={k + 1}")
    return total


def hyper3f2_terminating(a, b, c, d, e) -> Fraction:
    """``3F2(a, b, c; d, e; 1)`` summed exactly; ``a`` is a nonpositive integer."""
    return _terms(a, b, c, d, e, regularize_e=False)


def hyper3f2_regularized(a, b, c, d, e) -> Fraction:
    """``3F2(a, b, c; d, e; 1) / Gamma(e)`` for integer ``e``.

    Each term carries ``1/Gamma(e + k)``, which vanishes when ``e + k <= 0``;
    this is the limit that makes the series meaningful when ``e`` itself is a
    nonpositive integer.
    """
    return _terms(a, b, c, d, e, regularize_e=True)


def _check_rung(n: int, m: int, n1: int) -> None:
    if n < 0 or abs(m) > n or (n - m) % 2:
        raise ValueError(f"invalid (n={n}, m={m})")
    if not 0 <= n1 <= n:
        raise ValueError(f"n1={n1} outside [0, {n}]")


def special_cgc(n: int, m: int, n1: int) -> SignedSqrtRational:
    """``C^{n1,0}_{n/2,-m/2; n/2,m/2}`` from the factorial prefactor times a
    terminating ``3F2``.

    With ``g = n1``, ``2a = n`` and ``a + b = (n+m)/2``::

        (2a)! g! / ((a+b)! (g-a-b)!) * sqrt((2g+1) / ((2a-g)! (2a+g+1)!))
            * 3F2(-2a+g, g+1, -a-b; -2a, g-a-b+1; 1)
    """
    _check_rung(n, m, n1)
    apb = (n + m) // 2  # alpha + beta
    gab = n1 - apb  # gamma - alpha - beta
    series = hyper3f2_regularized(n1 - n, n1 + 1, -apb, -n, gab + 1)
    coeff = Fraction(factorial(n) * factorial(n1), factorial(apb)) * series
    radicand = Fraction(2 * n1 + 1, factorial(n - n1) * factorial(n + n1 + 1))
    return SignedSqrtRational.from_parts(coeff, radicand)


def racah_special_cgc(n: int, m: int, n1: int) -> SignedSqrtRational:
    """Same coefficient as :func:`special_cgc`, through the general Racah sum."""
    _check_rung(n, m, n1)
    return cgc(AngularMomentum(n, -m), AngularMomentum(n, m), AngularMomentum(2 * n1, 0))


def w_phase(n1: int, m: int) -> QuarterPhase:
    """``i^n1 (-1)^((m+|m|)/2)``."""
    return QuarterPhase(n1 + (m + abs(m)))  # (-1)^j = i^(2j)


def w_coefficient(n1: int, n2: int, m: int) -> ExactComplex:
    n = n1 + n2
    if n1 < 0 or n2 < 0:
        raise ValueError("n1, n2 must be nonnegative")
    _check_rung(n, m, n1)
    return ExactComplex(w_phase(n1, m), special_cgc(n, m, n1))


def w_tilde_coefficient(n: int, m: int, n1: int) -> ExactComplex:
    """Coefficient of ``Upsilon^II_{n1,n-n1}`` in the expansion of ``Upsilon^I_{n,m}``."""
    _check_rung(n, m, n1)
    return ExactComplex(QuarterPhase(-n1 + (m + abs(m))), special_cgc(n, m, n1))


@dataclass(frozen=True)
class InterbasisMatrix:
    """Exact ``(n+1) x (n+1)`` matrix; rows ``n1 = n..0``, columns ``m = n, n-2, .., -n``."""

    n: int
    entries: tuple[tuple[ExactComplex, ...], ...]

    @property
    def rows(self) -> list[tuple[int, int]]:
        return [(n1, self.n - n1) for n1 in range(self.n, -1, -1)]

    @property
    def cols(self) -> list[int]:
        return list(range(self.n, -self.n - 1, -2))

    def __getitem__(self, ij) -> ExactComplex:
        i, j = ij
        return self.entries[i][j]

    def entry(self, n1: int, m: int) -> ExactComplex:
        return self.entries[self.n - n1][(self.n - m) // 2]

    def to_complex(self) -> np.ndarray:
        return np.array([[e.to_complex() for e in row] for row in self.entries], dtype=complex)

    def conjugate_transpose(self) -> tuple[tuple[ExactComplex, ...], ...]:
        size = self.n + 1
        return tuple(
            tuple(self.entries[j][i].conjugate() for j in range(size)) for i in range(size)
        )

    def row_norms_squared(self) -> list[Fraction]:
        return [ssr_sum_of_squares(e.magnitude for e in row) for row in self.entries]

    def gram(self) -> list[list[RadicalSum]]:
        """Exact ``W W^dagger`` as radical sums."""
        size = self.n + 1
        return [
            [
                RadicalSum(
                    self.entries[a][k] * self.entries[b][k].conjugate() for k in range(size)
                )
                for b in range(size)
            ]
            for a in range(size)
        ]

    def is_unitary(self) -> bool:
        for a, row in enumerate(self.gram()):
            for b, s in enumerate(row):
                if s.as_rational() != (1 if a == b else 0):
                    return False
        return True


def w_matrix(n: int) -> InterbasisMatrix:
    if n < 0:
        raise ValueError("rung must be nonnegative")
    entries = tuple(
        tuple(w_coefficient(n1, n - n1, m) for m in range(n, -n - 1, -2))
        for n1 in range(n, -1, -1)
    )
    return InterbasisMatrix(n, entries)


def w_tilde_matrix(n: int) -> tuple[tuple[ExactComplex, ...], ...]:
    """Rows indexed by ``m`` (descending), columns by ``n1`` (descending)."""
    return tuple(
        tuple(w_tilde_coefficient(n, m, n1) for n1 in range(n, -1, -1))
        for m in range(n, -n - 1, -2)
    )

"""Exact numbers: rationals, signed square roots of rationals, quarter-turn phases.

Every Clebsch-Gordan coefficient is of the form ``sign * sqrt(p/q)``, and every
interbasis matrix entry is such a value times a power of ``i``.  This module
holds those types and the few operations on them that stay exact.

Rationals are plain :class:`fractions.Fraction` objects.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

BigRational = Fraction

FACTORIAL_CACHE_CAP = 512

_fact_lock = threading.Lock()
_fact_cache = [1]


def factorial(n: int) -> int:
    """Exact ``n!``; values up to ``FACTORIAL_CACHE_CAP`` are memoized."""
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    if n < len(_fact_cache):
        return _fact_cache[n]
    if n > FACTORIAL_CACHE_CAP:
        return math.factorial(n)
    with _fact_lock:
        while len(_fact_cache) <= n:
            _fact_cache.append(_fact_cache[-1] * len(_fact_cache))
    return _fact_cache[n]


def inv_factorial(n: int) -> Fraction:
    """``1/n!`` with the reciprocal-gamma convention: zero for negative ``n``."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def pochhammer(a, k: int) -> Fraction:
    """Rising factorial ``(a)_k`` for rational ``a``."""
    out = Fraction(1)
    a = Fraction(a)
    for i in range(k):
        out *= a + i
    return out


def _sign(q) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class SignedSqrtRational:
    """The real number ``sign * sqrt(radicand)``."""

    sign: int
    radicand: Fraction

    def __post_init__(self):
        rad = Fraction(self.radicand)
        object.__setattr__(self, "radicand", rad)
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if rad < 0:
            raise ValueError(f"radicand must be nonnegative, got {rad}")
        if (self.sign == 0) != (rad == 0):
            raise ValueError("sign is zero exactly when the radicand is zero")

    @classmethod
    def zero(cls) -> "SignedSqrtRational":
        return cls(0, Fraction(0))

    @classmethod
    def from_rational(cls, q) -> "SignedSqrtRational":
        """Exact embedding of a rational ``q`` as ``sign(q) * sqrt(q**2)``."""
        q = Fraction(q)
        return cls(_sign(q), q * q)

    @classmethod
    def from_parts(cls, coeff, radicand) -> "SignedSqrtRational":
        """The value ``coeff * sqrt(radicand)`` for rational ``coeff``."""
        coeff = Fraction(coeff)
        radicand = Fraction(radicand)
        if coeff == 0 or radicand == 0:
            return cls.zero()
        return cls(_sign(coeff), coeff * coeff * radicand)

    def __mul__(self, other):
        if isinstance(other, SignedSqrtRational):
            return ssr_mul(self, other)
        return NotImplemented

    def __neg__(self) -> "SignedSqrtRational":
        return SignedSqrtRational(-self.sign, self.radicand)

    def __float__(self) -> float:
        return ssr_to_float(self)

    def square(self) -> Fraction:
        """The signed square ``sign * radicand``."""
        return self.sign * self.radicand

    def is_zero(self) -> bool:
        return self.sign == 0

    def split(self) -> tuple[Fraction, int]:
        """Write the value as ``coeff * sqrt(kernel)`` with ``kernel`` squarefree."""
        if self.sign == 0:
            return Fraction(0), 1
        # sqrt(p/q) = sqrt(p*q) / q
        p, q = self.radicand.numerator, self.radicand.denominator
        outer, kernel = _square_split(p * q)
        return Fraction(self.sign * outer, q), kernel

    def __repr__(self) -> str:
        s = {1: "+", -1: "-", 0: ""}[self.sign]
        return f"{s}sqrt({self.radicand})"


def ssr_mul(a: SignedSqrtRational, b: SignedSqrtRational) -> SignedSqrtRational:
    return SignedSqrtRational(a.sign * b.sign, a.radicand * b.radicand)


def ssr_to_float(a: SignedSqrtRational) -> float:
    """``sign * sqrt(radicand)`` rounded to double from a 128-bit-accurate root.

    Raises OverflowError when the value is out of double range.
    """
    if a.sign == 0:
        return 0.0
    p, q = a.radicand.numerator, a.radicand.denominator
    # Scale so the integer root carries ~128 significant bits.
    shift = max(0, 128 - (p.bit_length() - q.bit_length()) // 2)
    root = math.isqrt((p << (2 * shift)) // q)
    value = Fraction(root, 1 << shift)
    try:
        out = float(value)
    except OverflowError:
        raise OverflowError(f"sqrt({a.radicand}) does not fit in a double") from None
    if math.isinf(out):
        raise OverflowError(f"sqrt({a.radicand}) does not fit in a double")
    return a.sign * out


def ssr_sum_of_squares(values: Iterable[SignedSqrtRational]) -> Fraction:
    """Exact ``sum(v**2)``."""
    return sum((v.radicand for v in values), Fraction(0))


_SMALL_PRIMES: list[int] = []


def _small_primes(limit: int = 5000) -> list[int]:
    if not _SMALL_PRIMES:
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(limit) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        _SMALL_PRIMES.extend(i for i, flag in enumerate(sieve) if flag)
    return _SMALL_PRIMES


def _square_split(n: int) -> tuple[int, int]:
    """Return ``(a, k)`` with ``n == a*a*k``.

    ``k`` is squarefree whenever the cofactor left after trial division by
    primes below 5000 is prime or a perfect square.  That always holds for the
    factorial ratios used in this package.
    """
    if n <= 0:
        raise ValueError("expected a positive integer")
    outer, kernel = 1, 1
    for p in _small_primes():
        if p * p > n:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            outer *= p ** (e // 2)
            if e % 2:
                kernel *= p
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            outer *= r
        else:
            kernel *= n
    return outer, kernel


@dataclass(frozen=True)
class QuarterPhase:
    """The unit ``i**k`` with ``k`` taken mod 4."""

    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 4)

    def __mul__(self, other):
        if isinstance(other, QuarterPhase):
            return QuarterPhase(self.k + other.k)
        return NotImplemented

    def conjugate(self) -> "QuarterPhase":
        return QuarterPhase(-self.k)

    def to_complex(self) -> complex:
        return (1, 1j, -1, -1j)[self.k]


@dataclass(frozen=True)
class ExactComplex:
    """``i**phase.k * magnitude``, stored with a nonnegative magnitude sign."""

    phase: QuarterPhase
    magnitude: SignedSqrtRational

    def __post_init__(self):
        if self.magnitude.sign < 0:
            object.__setattr__(self, "phase", self.phase * QuarterPhase(2))
            object.__setattr__(self, "magnitude", -self.magnitude)
        elif self.magnitude.sign == 0 and self.phase.k != 0:
            object.__setattr__(self, "phase", QuarterPhase(0))

    @classmethod
    def from_parts(cls, k: int, value: SignedSqrtRational) -> "ExactComplex":
        return cls(QuarterPhase(k), value)

    def __mul__(self, other):
        if isinstance(other, ExactComplex):
            return ExactComplex(self.phase * other.phase, self.magnitude * other.magnitude)
        return NotImplemented

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.phase.conjugate(), self.magnitude)

    def is_zero(self) -> bool:
        return self.magnitude.sign == 0

    def abs_squared(self) -> Fraction:
        return self.magnitude.radicand

    def to_complex(self) -> complex:
        return self.phase.to_complex() * ssr_to_float(self.magnitude)

    def __complex__(self) -> complex:
        return self.to_complex()


class RadicalSum:
    """Exact sum of :class:`ExactComplex` terms.

    Terms are grouped by their squarefree radical kernel; only like radicals
    are ever added.  The result is zero exactly when every group cancels.
    """

    def __init__(self, terms: Iterable[ExactComplex] = ()):
        # kernel -> [real rational part, imaginary rational part]
        self._groups: dict[int, list[Fraction]] = {}
        for t in terms:
            self.add(t)

    def add(self, term: ExactComplex) -> None:
        if term.is_zero():
            return
        coeff, kernel = term.magnitude.split()
        g = self._groups.setdefault(kernel, [Fraction(0), Fraction(0)])
        k = term.phase.k
        if k == 0:
            g[0] += coeff
        elif k == 1:
            g[1] += coeff
        elif k == 2:
            g[0] -= coeff
        else:
            g[1] -= coeff

    def groups(self) -> dict[int, tuple[Fraction, Fraction]]:
        """Nonvanishing groups as ``kernel -> (re, im)`` rational coefficients."""
        return {
            k: (re, im) for k, (re, im) in self._groups.items() if re != 0 or im != 0
        }

    def is_zero(self) -> bool:
        return not self.groups()

    def as_rational(self) -> Fraction | None:
        """The sum as a rational when it is real and free of radicals."""
        g = self.groups()
        if not g:
            return Fraction(0)
        if set(g) == {1} and g[1][1] == 0:
            return g[1][0]
        return None

    def to_complex(self) -> complex:
        return sum(
            (float(re) + 1j * float(im)) * math.sqrt(k) for k, (re, im) in self.groups().items()
        )

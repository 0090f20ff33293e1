"""Exact bivariate polynomials and the Cartesian form of both disk bases.

The Zernike operator ``Z = lap - (r.grad)^2 - 2 r.grad`` is applied by formal
differentiation, so the eigenvalue equation ``Z psi = -n(n+2) psi`` can be
checked coefficient by coefficient with no rounding at all.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Integral, Rational

from .exact_num import factorial
from .special_poly import gegenbauer_eval, jacobi_eval, legendre_eval


class BivariatePoly:
    """Sparse polynomial in ``(x, y)`` with Fraction coefficients.

    Immutable; ``coeffs`` maps ``(i, j)`` to the coefficient of ``x**i * y**j``
    and never stores zeros.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for (i, j), v in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent {(i, j)}")
            v = Fraction(v)
            if v:
                c[(int(i), int(j))] = v
        self._c = dict(sorted(c.items()))

    @classmethod
    def constant(cls, value) -> "BivariatePoly":
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    def one(self) -> "BivariatePoly":
        return BivariatePoly.constant(1)

    @property
    def coeffs(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._c)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._c.get((i, j), Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((i + j for i, j in self._c), default=-1)

    def is_zero(self) -> bool:
        return not self._c

    @staticmethod
    def _lift(other):
        if isinstance(other, BivariatePoly):
            return other
        if isinstance(other, (Integral, Rational)):
            return BivariatePoly.constant(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            c[k] = c.get(k, 0) + v
        return BivariatePoly(c)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (Integral, Rational)):
            s = Fraction(other)
            return BivariatePoly({k: v * s for k, v in self._c.items()})
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        c: dict = {}
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                key = (i1 + i2, j1 + j2)
                c[key] = c.get(key, 0) + v1 * v2
        return BivariatePoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __repr__(self):
        if not self._c:
            return "BivariatePoly(0)"
        terms = " + ".join(f"{v}*x^{i}*y^{j}" for (i, j), v in self._c.items())
        return f"BivariatePoly({terms})"

    def dx(self) -> "BivariatePoly":
        return BivariatePoly({(i - 1, j): i * v for (i, j), v in self._c.items() if i})

    def dy(self) -> "BivariatePoly":
        return BivariatePoly({(i, j - 1): j * v for (i, j), v in self._c.items() if j})

    def times_x(self) -> "BivariatePoly":
        return BivariatePoly({(i + 1, j): v for (i, j), v in self._c.items()})

    def times_y(self) -> "BivariatePoly":
        return BivariatePoly({(i, j + 1): v for (i, j), v in self._c.items()})

    def parity(self, var: str) -> int | None:
        """0 if even, 1 if odd in ``var`` ('x' or 'y'); None if mixed."""
        idx = 0 if var == "x" else 1
        pars = {k[idx] % 2 for k in self._c}
        return pars.pop() if len(pars) == 1 else (0 if not pars else None)

    def __call__(self, x, y):
        return poly_eval(self, x, y)


def poly_eval(p: BivariatePoly, x, y):
    """Horner evaluation, in ``y`` for each power of ``x`` and then in ``x``.

    Exact for rational inputs; works elementwise for numpy arrays.
    """
    if p.is_zero():
        return 0 * x * y
    if isinstance(x, Integral):
        x = Fraction(x)
    if isinstance(y, Integral):
        y = Fraction(y)
    by_i: dict[int, dict[int, Fraction]] = {}
    for (i, j), v in p.coeffs.items():
        by_i.setdefault(i, {})[j] = v
    deg_x = max(by_i)
    as_float = _is_float(x, y)
    acc = 0
    for i in range(deg_x, -1, -1):
        row = by_i.get(i)
        inner = 0
        if row:
            for j in range(max(row), -1, -1):
                c = row.get(j, 0)
                inner = inner * y + (float(c) if as_float else c)
        acc = acc * x + inner
    return acc


def _is_float(x, y) -> bool:
    return not (isinstance(x, Rational) and isinstance(y, Rational))


def euler_operator(p: BivariatePoly) -> BivariatePoly:
    """``r . grad p = x p_x + y p_y``."""
    return p.dx().times_x() + p.dy().times_y()


def zernike_apply(p: BivariatePoly) -> BivariatePoly:
    """``(lap - (r.grad)^2 - 2 r.grad) p``, exactly."""
    lap = p.dx().dx() + p.dy().dy()
    e1 = euler_operator(p)
    e2 = euler_operator(e1)
    return lap - e2 - e1 * 2


@dataclass(frozen=True)
class NormalizedPolyPair:
    """``(poly_re + i poly_im) * sqrt(norm_factor_squared * pi**pi_power)``."""

    poly_re: BivariatePoly
    poly_im: BivariatePoly
    norm_factor_squared: Fraction
    pi_power: int = -1

    def norm_squared_value(self) -> float:
        return float(self.norm_factor_squared) * math.pi**self.pi_power

    def evaluate(self, x, y):
        """Float value of the normalized function at ``(x, y)``."""
        scale = math.sqrt(self.norm_squared_value())
        re = poly_eval(self.poly_re, x, y)
        if self.poly_im.is_zero():
            return scale * re
        return scale * (re + 1j * poly_eval(self.poly_im, x, y))


def _check_index_I(n: int, m: int) -> None:
    if n < 0 or abs(m) > n or (n - abs(m)) % 2:
        raise ValueError(f"invalid basis I index (n={n}, m={m}): need |m| <= n, n-|m| even")


def _complex_power(mm: int, sign: int) -> tuple[BivariatePoly, BivariatePoly]:
    """Real and imaginary parts of ``(x + sign*i*y)**mm``."""
    re, im = {}, {}
    for k in range(mm + 1):
        c = comb(mm, k)
        # (i y)^k = i^k y^k
        q = k % 4
        unit = (1, 1, -1, -1)[q]
        if k % 2 == 0:
            re[(mm - k, k)] = unit * c
        else:
            im[(mm - k, k)] = unit * c * sign
    return BivariatePoly(re), BivariatePoly(im)


@lru_cache(maxsize=None)
def basis_I_cartesian(n: int, m: int) -> NormalizedPolyPair:
    """Cartesian expansion of the polar Zernike function ``Psi^I_{n,m}``."""
    _check_index_I(n, m)
    nr = (n - abs(m)) // 2
    x, y = BivariatePoly.x(), BivariatePoly.y()
    t = 1 - (x * x + y * y) * 2
    radial = jacobi_eval(nr, abs(m), 0, t)
    if not isinstance(radial, BivariatePoly):
        radial = BivariatePoly.constant(radial)
    if nr % 2:
        radial = -radial
    re, im = _complex_power(abs(m), 1 if m >= 0 else -1)
    return NormalizedPolyPair(radial * re, radial * im, Fraction(n + 1), -1)


def norm_const_II_squared(n1: int, n2: int) -> Fraction:
    """Rational part of ``C_{n1,n2}**2``; the full value carries a factor ``1/pi``."""
    if n1 < 0 or n2 < 0:
        raise ValueError("basis II indices must be nonnegative")
    return Fraction(
        4**n1 * factorial(n1) ** 2 * (2 * n1 + 1) * (n1 + n2 + 1) * factorial(n2),
        factorial(2 * n1 + n2 + 1),
    )


@lru_cache(maxsize=None)
def basis_II_cartesian(n1: int, n2: int) -> NormalizedPolyPair:
    """Cartesian expansion of the Legendre x Gegenbauer function ``Psi^II_{n1,n2}``.

    ``(1-x^2)^(n1/2) P_{n1}(y / sqrt(1-x^2))`` is a polynomial because
    ``P_{n1}`` has only powers of the parity of ``n1``.
    """
    if n1 < 0 or n2 < 0:
        raise ValueError(f"invalid basis II index ({n1}, {n2})")
    x, y = BivariatePoly.x(), BivariatePoly.y()
    leg = legendre_eval(n1, x)
    if not isinstance(leg, BivariatePoly):
        leg = BivariatePoly.constant(leg)
    one_minus_x2 = 1 - x * x
    homog = BivariatePoly()
    for (k, _), c in leg.coeffs.items():
        homog = homog + (y**k) * (one_minus_x2 ** ((n1 - k) // 2)) * c
    geg = gegenbauer_eval(n2, n1 + 1, x)
    if not isinstance(geg, BivariatePoly):
        geg = BivariatePoly.constant(geg)
    return NormalizedPolyPair(homog * geg, BivariatePoly(), norm_const_II_squared(n1, n2), -1)

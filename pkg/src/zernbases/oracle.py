"""Independent numerical checks of the closed forms.

Disk integrals use ``u = r^2`` so that the radial factor of any product of two
basis functions is a polynomial in ``u``; a Gauss-Legendre rule in ``u`` then
integrates it exactly.  Half-sphere integrals use system I angles with
Gauss-Legendre in ``cos(theta)``.  Angular integrals use the periodic
trapezoid rule, which is exact for trigonometric polynomials of low enough
degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .bases import IndexI, IndexII, enumerate_rung, psi, upsilon_I, upsilon_II
from .exact_num import ExactComplex, QuarterPhase, SignedSqrtRational, factorial, inv_factorial
from .geometry import AnglesI, anglesI_to_anglesII
from .interbasis import hyper3f2_regularized, w_matrix
from .poly2d import (
    BivariatePoly,
    basis_I_cartesian,
    basis_II_cartesian,
    norm_const_II_squared,
    zernike_apply,
)
from .special_poly import gegenbauer_eval

KINDS = ("gauss_legendre_product", "trapezoid_periodic")


@dataclass(frozen=True)
class QuadratureRule:
    """``order`` Gauss-Legendre nodes radially and ``2*order`` trapezoid
    nodes in angle for the product rule; ``order`` nodes for the periodic rule."""

    kind: str = "gauss_legendre_product"
    order: int = 64

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown quadrature kind {self.kind!r}")
        if self.order < 2:
            raise ValueError("quadrature order must be at least 2")

    def periodic(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights on ``[-pi, pi)`` summing to ``2 pi``."""
        count = 2 * self.order if self.kind == "gauss_legendre_product" else self.order
        nodes = -math.pi + 2 * math.pi * np.arange(count) / count
        return nodes, np.full(count, 2 * math.pi / count)

    def unit_interval(self) -> tuple[np.ndarray, np.ndarray]:
        """Gauss-Legendre nodes and weights on ``[0, 1]``."""
        t, w = np.polynomial.legendre.leggauss(self.order)
        return (t + 1) / 2, w / 2

    def disk(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(x, y, w)`` for ``int_D f dx dy``; weights sum to ``pi``."""
        u, wu = self.unit_interval()
        phi, wp = self.periodic()
        r = np.sqrt(u)[:, None]
        x = r * np.cos(phi)[None, :]
        y = r * np.sin(phi)[None, :]
        w = 0.5 * wu[:, None] * wp[None, :]
        return x.ravel(), y.ravel(), w.ravel()

    def hemisphere(self) -> tuple[AnglesI, np.ndarray]:
        """System I angles and weights for ``int_H f dS``; weights sum to ``2 pi``."""
        c, wc = self.unit_interval()
        phi, wp = self.periodic()
        theta = np.arccos(c)[:, None] * np.ones_like(phi)[None, :]
        phis = np.ones_like(c)[:, None] * phi[None, :]
        return AnglesI(theta.ravel(), phis.ravel()), (wc[:, None] * wp[None, :]).ravel()


def _pairwise_sum(v: np.ndarray):
    # np.add.reduce already sums pairwise along contiguous axes
    return np.add.reduce(np.ascontiguousarray(v))


def disk_inner_product(
    f: Callable, g: Callable, rule: QuadratureRule = QuadratureRule()
) -> complex:
    """``int_D conj(f) g dx dy`` for callables ``f(x, y)`` and ``g(x, y)``."""
    x, y, w = rule.disk()
    return complex(_pairwise_sum(w * np.conj(f(x, y)) * g(x, y)))


def disk_gram(funcs: list[Callable], rule: QuadratureRule = QuadratureRule()) -> np.ndarray:
    """Matrix of all pairwise disk inner products ``<f_a, f_b>``."""
    x, y, w = rule.disk()
    vals = np.array([np.asarray(f(x, y), dtype=complex) for f in funcs])
    return (np.conj(vals) * w) @ vals.T


def basis_function(idx) -> Callable:
    """Disk-function handle ``(x, y) -> value`` for an index of either basis."""
    return lambda x, y: psi(idx, x, y)


@dataclass
class OverlapReport:
    n: int
    numeric: np.ndarray
    exact: np.ndarray
    max_abs_error: float


def overlap_matrix_numeric(n: int, rule: QuadratureRule = QuadratureRule(order=96)) -> OverlapReport:
    """``<Upsilon^I_{n,m}, Upsilon^II_{n1,n2}>`` over the half-sphere vs. ``W_(n)``."""
    angles, w = rule.hemisphere()
    angles2 = anglesI_to_anglesII(angles)
    idx_I, idx_II = enumerate_rung(n)
    vI = np.array([upsilon_I(i, angles) for i in idx_I])
    vII = np.array([upsilon_II(j, angles2) for j in idx_II])
    numeric = (vII * w) @ np.conj(vI).T
    exact = w_matrix(n).to_complex()
    return OverlapReport(n, numeric, exact, float(np.max(np.abs(numeric - exact))))


# -- Fourier integral int_{-pi}^{pi} sin^l(p) C_nu^(l+1)(cos p) e^{-i m p} dp ------


@dataclass(frozen=True)
class FourierValue:
    """``2 pi * i**phase * coeff`` with rational ``coeff >= 0``."""

    phase: int
    coeff: Fraction

    def __post_init__(self):
        k, c = self.phase % 4, Fraction(self.coeff)
        if c < 0:
            k, c = (k + 2) % 4, -c
        if c == 0:
            k = 0
        object.__setattr__(self, "phase", k)
        object.__setattr__(self, "coeff", c)

    def to_complex(self) -> complex:
        return 2 * math.pi * float(self.coeff) * (1, 1j, -1, -1j)[self.phase]


def fourier_nodes(lam: int, nu: int, m: int) -> int:
    return 4 * (lam + nu + abs(m)) + 64


def fourier_integral_numeric(lam: int, nu: int, m: int) -> complex:
    """Periodic trapezoid rule with enough nodes to be exact up to rounding."""
    rule = QuadratureRule("trapezoid_periodic", fourier_nodes(lam, nu, m))
    p, w = rule.periodic()
    vals = np.sin(p) ** lam * gegenbauer_eval(nu, lam + 1, np.cos(p)) * np.exp(-1j * m * p)
    return complex(_pairwise_sum(w * vals))


def fourier_integral_series(lam: int, nu: int, m: int) -> FourierValue:
    """Expand both factors as finite Fourier sums and keep the constant term.

    ``sin^l = (2i)^-l sum_k (-1)^k C(l,k) e^{i(l-2k)p}`` and
    ``C_nu^(l+1)(cos p) = sum_j (l+j)! (l+nu-j)! / (j! (nu-j)! l!^2) e^{-i(nu-2j)p}``;
    the product against ``e^{-imp}`` survives only where ``l - 2k - nu + 2j = m``.
    """
    total = Fraction(0)
    lf2 = factorial(lam) ** 2
    for k in range(lam + 1):
        twice_j = m - lam + nu + 2 * k
        if twice_j % 2:
            continue
        j = twice_j // 2
        if not 0 <= j <= nu:
            continue
        sin_c = (-1) ** k * Fraction(factorial(lam), factorial(k) * factorial(lam - k))
        geg_c = Fraction(
            factorial(lam + j) * factorial(lam + nu - j), factorial(j) * factorial(nu - j) * lf2
        )
        total += sin_c * geg_c
    return FourierValue(-lam, total / 2**lam)


def fourier_integral_closed(lam: int, nu: int, m: int) -> FourierValue:
    """Closed form as a prefactor times a terminating ``3F2`` at unit argument.

    Returns zero when ``lam + nu + m`` is odd, where the integrand has no
    constant Fourier component.
    """
    if (lam + nu + m) % 2:
        return FourierValue(0, Fraction(0))
    lo = (lam - nu - m) // 2
    hi = (lam + nu + m) // 2
    series = hyper3f2_regularized(-nu, lam + 1, -hi, -lam - nu, lo + 1)
    coeff = (
        Fraction(factorial(lam + nu), factorial(nu))
        * (-1) ** (lo % 2)
        * inv_factorial(hi)
        * series
    )
    return FourierValue(-lam, coeff / 2**lam)


def w_from_fourier(n1: int, n2: int, m: int) -> ExactComplex:
    """``W^{n,m}_{n1,n2}`` rebuilt from the rim Fourier integral.

    ``W = (-1)^n_r C_{n1,n2} / (2 sqrt(pi (n+1))) * I``, and with
    ``I = 2 pi i^k q`` and ``C^2 = c/pi`` this is ``(-1)^n_r i^k q sqrt(c/(n+1))``.
    """
    n = n1 + n2
    nr = (n - abs(m)) // 2
    fv = fourier_integral_series(n1, n2, m)
    coeff = fv.coeff * (-1) ** nr
    mag = SignedSqrtRational.from_parts(coeff, norm_const_II_squared(n1, n2) / (n + 1))
    return ExactComplex(QuarterPhase(fv.phase), mag)


# -- exact eigenvalue check ---------------------------------------------------


@dataclass(frozen=True)
class EigenResidual:
    ok: bool
    eigenvalue: int
    residual_re: BivariatePoly
    residual_im: BivariatePoly


def eigen_residual(idx) -> EigenResidual:
    """Apply the Zernike operator symbolically; ``ok`` iff ``Z p = -n(n+2) p`` exactly."""
    if isinstance(idx, IndexI):
        pair = basis_I_cartesian(idx.n, idx.m)
    elif isinstance(idx, IndexII):
        pair = basis_II_cartesian(idx.n1, idx.n2)
    else:
        raise TypeError(f"expected IndexI or IndexII, got {type(idx).__name__}")
    n = idx.rung
    e = n * (n + 2)
    res_re = zernike_apply(pair.poly_re) + pair.poly_re * e
    res_im = zernike_apply(pair.poly_im) + pair.poly_im * e
    return EigenResidual(res_re.is_zero() and res_im.is_zero(), e, res_re, res_im)


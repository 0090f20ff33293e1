"""Product-form evaluation of the two Zernike solution bases.

Basis I is Zernike's polar family, labelled by ``(n, m)``; basis II is the
Legendre x Gegenbauer family labelled by ``(n1, n2)``.  Each has a disk form
(``psi_*``, orthonormal under ``dx dy``) and a half-sphere form
(``upsilon_*``, orthonormal under the solid-angle measure).

The disk form of basis I carries a factor ``(-1)**n_r`` that the half-sphere
form does not, so ``upsilon_I = (-1)**n_r (1 - r^2)**(1/4) psi_I``, while
``upsilon_II = (1 - r^2)**(1/4) psi_II`` holds with no sign.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geometry import AnglesI, AnglesII
from .poly2d import basis_II_cartesian, norm_const_II_squared
from .special_poly import gegenbauer_eval, jacobi_eval, legendre_eval

# Where 1 - x^2 falls below this, psi_II is evaluated from its Cartesian form.
RIM_THRESHOLD = 1e-10


@dataclass(frozen=True, order=True)
class IndexI:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or abs(self.m) > self.n or (self.n - abs(self.m)) % 2:
            raise ValueError(
                f"invalid basis I index (n={self.n}, m={self.m}): need |m| <= n and n-|m| even"
            )

    @property
    def n_r(self) -> int:
        return (self.n - abs(self.m)) // 2

    @property
    def rung(self) -> int:
        return self.n

    def as_tuple(self) -> tuple[int, int]:
        return (self.n, self.m)


@dataclass(frozen=True, order=True)
class IndexII:
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise ValueError(f"invalid basis II index ({self.n1}, {self.n2})")

    @property
    def rung(self) -> int:
        return self.n1 + self.n2

    def as_tuple(self) -> tuple[int, int]:
        return (self.n1, self.n2)


@dataclass(frozen=True)
class NormConstII:
    """``C_{n1,n2}**2 = rational * pi**pi_power``."""

    rational: Fraction
    pi_power: int = -1

    @property
    def value_squared(self) -> float:
        return float(self.rational) * math.pi**self.pi_power

    @property
    def value(self) -> float:
        return math.sqrt(self.value_squared)


def enumerate_rung(n: int) -> tuple[list[IndexI], list[IndexII]]:
    """Indices of rung ``n``: ``m`` from ``n`` down to ``-n`` in steps of 2,
    and ``n1`` from ``n`` down to 0."""
    if n < 0:
        raise ValueError("rung must be nonnegative")
    return (
        [IndexI(n, m) for m in range(n, -n - 1, -2)],
        [IndexII(n1, n - n1) for n1 in range(n, -1, -1)],
    )


def indices_through(n_max: int, basis: str) -> list:
    """All indices of the given basis with rung ``<= n_max``, rung by rung."""
    out = []
    for n in range(n_max + 1):
        a, b = enumerate_rung(n)
        out.extend(a if basis == "I" else b)
    return out


def norm_const_II(idx: IndexII) -> NormConstII:
    return NormConstII(norm_const_II_squared(idx.n1, idx.n2), -1)


def psi_I(idx: IndexI, r, phi):
    """Disk form ``(-1)^n_r sqrt((n+1)/pi) r^|m| P_n_r^(|m|,0)(1-2r^2) e^{i m phi}``."""
    r = np.asarray(r, dtype=float)
    phi = np.asarray(phi, dtype=float)
    am = abs(idx.m)
    radial = r**am * _jacobi(idx.n_r, am, 1 - 2 * r * r)
    sign = -1.0 if idx.n_r % 2 else 1.0
    out = sign * math.sqrt((idx.n + 1) / math.pi) * radial * np.exp(1j * idx.m * phi)
    return out if out.ndim else complex(out)


def psi_I_xy(idx: IndexI, x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return psi_I(idx, np.hypot(x, y), np.arctan2(y, x))


def upsilon_I(idx: IndexI, a: AnglesI):
    """Half-sphere form in system I angles."""
    theta = np.asarray(a.theta, dtype=float)
    phi = np.asarray(a.phi, dtype=float)
    am = abs(idx.m)
    ct = np.clip(np.cos(theta), 0, None)
    out = (
        math.sqrt((idx.n + 1) / math.pi)
        * np.sin(theta) ** am
        * np.sqrt(ct)
        * _jacobi(idx.n_r, am, np.cos(2 * theta))
        * np.exp(1j * idx.m * phi)
    )
    return out if out.ndim else complex(out)


def psi_II(idx: IndexII, x, y):
    """Disk form ``C (1-x^2)^(n1/2) C_n2^(n1+1)(x) P_n1(y/sqrt(1-x^2))``; real."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    c = norm_const_II(idx).value
    one_minus = 1 - x * x
    rim = one_minus < RIM_THRESHOLD
    s = np.sqrt(np.where(rim, 1.0, one_minus))
    out = (
        c
        * s**idx.n1
        * gegenbauer_eval(idx.n2, idx.n1 + 1, np.array(x))
        * legendre_eval(idx.n1, np.array(y / s))
    )
    if np.any(rim):
        pair = basis_II_cartesian(idx.n1, idx.n2)
        out = np.where(rim, pair.evaluate(x, y), out)
    return out if out.ndim else float(out)


def upsilon_II(idx: IndexII, a: AnglesII):
    """Half-sphere form in system II angles; real."""
    tp = np.asarray(a.theta_p, dtype=float)
    pp = np.asarray(a.phi_p, dtype=float)
    c = norm_const_II(idx).value
    stp = np.clip(np.sin(tp), 0, None)
    spp = np.clip(np.sin(pp), 0, None)
    out = (
        c
        * stp ** (idx.n1 + 0.5)
        * np.sqrt(spp)
        * gegenbauer_eval(idx.n2, idx.n1 + 1, np.array(np.cos(tp)))
        * legendre_eval(idx.n1, np.array(np.cos(pp)))
    )
    return out if out.ndim else float(out)


def psi(idx, x, y):
    """Evaluate the disk function of either basis at Cartesian points."""
    if isinstance(idx, IndexI):
        return psi_I_xy(idx, x, y)
    return psi_II(idx, x, y)


def _jacobi(n, a, x):
    return jacobi_eval(n, a, 0, np.array(x, dtype=float, ndmin=1)).reshape(np.shape(x))

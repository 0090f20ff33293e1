"""Coefficient spectra over either basis: conversion, least-squares fitting,
grid sampling.

Spectra use the disk functions ``psi_*`` by default (``convention="disk"``).
The interbasis matrices relate the half-sphere functions, and
``upsilon_I = (-1)**n_r (1-r^2)**(1/4) psi_I`` while ``upsilon_II`` carries no
sign, so on the disk

    psi^II_{n1,n2} = sum_m W^{n,m}_{n1,n2} (-1)^n_r psi^I_{n,m}.

``convention="sphere"`` applies ``W`` without that sign, for coefficient
vectors over the ``upsilon`` functions.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bases import IndexI, IndexII, enumerate_rung, indices_through, psi
from .interbasis import w_matrix

REAL_TOL = 1e-12
CONVENTIONS = ("disk", "sphere")


def make_index(basis: str, pair) -> IndexI | IndexII:
    a, b = (int(v) for v in pair)
    if basis == "I":
        return IndexI(a, b)
    if basis == "II":
        return IndexII(a, b)
    raise ValueError(f"basis must be 'I' or 'II', got {basis!r}")


@dataclass
class WavefrontSpectrum:
    """Coefficients over one basis through rung ``max_rung``.

    Missing indices are zero.  ``is_real_wavefront`` tells whether the
    represented function is real-valued; for basis II that is the same as all
    coefficients being real.
    """

    basis: str
    max_rung: int
    coeffs: dict = field(default_factory=dict)
    convention: str = "disk"

    def __post_init__(self):
        if self.basis not in ("I", "II"):
            raise ValueError(f"basis must be 'I' or 'II', got {self.basis!r}")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.max_rung < 0:
            raise ValueError("max_rung must be nonnegative")
        want = IndexI if self.basis == "I" else IndexII
        clean = {}
        for idx, v in self.coeffs.items():
            if not isinstance(idx, want):
                idx = make_index(self.basis, idx)
            if idx.rung > self.max_rung:
                raise ValueError(f"index {idx.as_tuple()} lies above max_rung={self.max_rung}")
            if idx in clean:
                raise ValueError(f"duplicate index {idx.as_tuple()}")
            clean[idx] = complex(v)
        self.coeffs = clean

    def indices(self) -> list:
        return indices_through(self.max_rung, self.basis)

    def vector(self) -> np.ndarray:
        return np.array([self.coeffs.get(i, 0j) for i in self.indices()], dtype=complex)

    @classmethod
    def from_vector(cls, basis, max_rung, vec, convention="disk") -> "WavefrontSpectrum":
        idx = indices_through(max_rung, basis)
        vec = np.asarray(vec, dtype=complex)
        if vec.shape != (len(idx),):
            raise ValueError(f"expected {len(idx)} coefficients, got {vec.shape}")
        return cls(basis, max_rung, dict(zip(idx, vec)), convention)

    def is_real_wavefront(self, tol: float = REAL_TOL) -> bool:
        if self.basis == "II":
            return all(abs(v.imag) <= tol for v in self.coeffs.values())
        for idx, v in self.coeffs.items():
            partner = self.coeffs.get(IndexI(idx.n, -idx.m), 0j)
            if abs(v - np.conj(partner)) > tol:
                return False
        return True

    def evaluate(self, x, y):
        x = np.asarray(x, dtype=float)
        out = np.zeros(np.broadcast(x, np.asarray(y)).shape, dtype=complex)
        for idx, c in self.coeffs.items():
            if c:
                out = out + c * psi(idx, x, y)
        return out


def _rung_matrix(n: int, convention: str) -> np.ndarray:
    """``M`` with ``psi^II = M psi^I`` on one rung (rows n1 desc, cols m desc)."""
    w = w_matrix(n).to_complex()
    if convention == "disk":
        signs = np.array([(-1.0) ** ((n - abs(m)) // 2) for m in range(n, -n - 1, -2)])
        w = w * signs[None, :]
    return w


def convert(spec: WavefrontSpectrum, target: str) -> WavefrontSpectrum:
    """Re-express a spectrum in the other basis, rung by rung."""
    if target not in ("I", "II"):
        raise ValueError(f"target basis must be 'I' or 'II', got {target!r}")
    if target == spec.basis:
        return WavefrontSpectrum(spec.basis, spec.max_rung, dict(spec.coeffs), spec.convention)
    out = {}
    for n in range(spec.max_rung + 1):
        idx_I, idx_II = enumerate_rung(n)
        m_ = _rung_matrix(n, spec.convention)
        if spec.basis == "II":
            b = np.array([spec.coeffs.get(i, 0j) for i in idx_II])
            a = m_.T @ b
            out.update(zip(idx_I, a))
        else:
            a = np.array([spec.coeffs.get(i, 0j) for i in idx_I])
            # M is unitary, so (M^T)^-1 = conj(M)
            b = np.conj(m_) @ a
            out.update(zip(idx_II, b))
    return WavefrontSpectrum(target, spec.max_rung, out, spec.convention)


class RankDeficientError(ValueError):
    def __init__(self, rank: int, needed: int):
        self.rank = rank
        self.needed = needed
        super().__init__(
            f"design matrix has rank {rank} but {needed} basis functions; "
            f"{needed - rank} coefficient(s) undetermined"
        )


@dataclass
class FitResult:
    spectrum: WavefrontSpectrum
    rms_residual: float
    n_samples: int
    rank: int


def fit(x, y, values, basis: str, n_max: int, rcond: float = 1e-10) -> FitResult:
    """Least-squares projection of sampled disk values onto ``basis`` through ``n_max``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    values = np.asarray(values, dtype=complex)
    if not (x.shape == y.shape == values.shape) or x.ndim != 1:
        raise ValueError("x, y and values must be 1-D arrays of equal length")
    if np.any(x * x + y * y > 1 + 1e-12):
        raise ValueError("all samples must lie in the closed unit disk")
    idx = indices_through(n_max, basis)
    if len(x) < len(idx):
        raise RankDeficientError(len(x), len(idx))
    design = np.column_stack([np.asarray(psi(i, x, y), dtype=complex) for i in idx])
    coef, _, rank, sv = np.linalg.lstsq(design, values, rcond=rcond)
    if rank < len(idx):
        raise RankDeficientError(int(rank), len(idx))
    resid = values - design @ coef
    rms = float(np.sqrt(np.mean(np.abs(resid) ** 2)))
    return FitResult(WavefrontSpectrum.from_vector(basis, n_max, coef), rms, len(x), int(rank))


@dataclass
class GridSample:
    nx: int
    ny: int
    x: np.ndarray
    y: np.ndarray
    values: np.ndarray  # row-major, complex; NaN outside the disk
    mask: np.ndarray


def sample_grid(idx, nx: int, ny: int, threads: int = 1) -> GridSample:
    """Sample one basis function on an ``nx x ny`` grid over ``[-1, 1]^2``."""
    if nx < 2 or ny < 2:
        raise ValueError("grid resolution must be at least 2 x 2")
    xs = np.linspace(-1, 1, nx)
    ys = np.linspace(-1, 1, ny)
    gx, gy = np.meshgrid(xs, ys)  # row j <-> y[j]
    mask = gx**2 + gy**2 <= 1 + 1e-12
    values = np.full(gx.shape, np.nan + 0j, dtype=complex)

    def row(j):
        sel = mask[j]
        if np.any(sel):
            values[j, sel] = psi(idx, gx[j, sel], gy[j, sel])

    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            list(ex.map(row, range(ny)))
    else:
        for j in range(ny):
            row(j)
    return GridSample(nx, ny, gx, gy, values, mask)

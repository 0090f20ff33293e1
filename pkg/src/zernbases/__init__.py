"""Zernike bases I (polar) and II (Legendre x Gegenbauer) on the unit disk,
with the exact Clebsch-Gordan matrices that relate them."""
from .bases import (
    IndexI,
    IndexII,
    enumerate_rung,
    norm_const_II,
    psi,
    psi_I,
    psi_II,
    upsilon_I,
    upsilon_II,
)
from .exact_num import ExactComplex, QuarterPhase, SignedSqrtRational
from .interbasis import cgc, special_cgc, w_coefficient, w_matrix, w_tilde_coefficient
from .kernels import backend
from .wavefront import WavefrontSpectrum, convert, fit

__version__ = "0.1.0"

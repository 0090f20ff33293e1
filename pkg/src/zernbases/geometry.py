"""Maps between the unit disk, the upper half-sphere and its two angle systems.

System I has its pole on the +z axis, ``xi = (sin t cos p, sin t sin p, cos t)``
with ``t in [0, pi/2]``, ``p in (-pi, pi]``.  System II has its pole on the +x
axis, ``xi = (cos t', sin t' cos p', sin t' sin p')`` with ``t', p' in [0, pi]``.

All functions accept floats or numpy arrays.  At coordinate poles the
undefined angle is fixed: ``phi = 0`` in system I, ``phi' = pi/2`` in system II.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Below this value of sin(theta) (or sin(theta')) a point is treated as a pole.
POLE_EPS = 1e-15
_TOL = 1e-12


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


@dataclass(frozen=True)
class DiskPoint:
    x: float
    y: float

    def __post_init__(self):
        if np.any(np.asarray(self.x) ** 2 + np.asarray(self.y) ** 2 > 1 + _TOL):
            raise ValueError("point lies outside the closed unit disk")


@dataclass(frozen=True)
class SpherePoint:
    xi1: float
    xi2: float
    xi3: float

    def __post_init__(self):
        n2 = np.asarray(self.xi1) ** 2 + np.asarray(self.xi2) ** 2 + np.asarray(self.xi3) ** 2
        if np.any(np.abs(n2 - 1) > 1e-12):
            raise ValueError("point is not on the unit sphere")
        if np.any(np.asarray(self.xi3) < -_TOL):
            raise ValueError("point is not on the upper half-sphere")


@dataclass(frozen=True)
class AnglesI:
    theta: float
    phi: float


@dataclass(frozen=True)
class AnglesII:
    theta_p: float
    phi_p: float


def disk_to_sphere(p: DiskPoint) -> SpherePoint:
    x, y = np.asarray(p.x, dtype=float), np.asarray(p.y, dtype=float)
    r2 = x * x + y * y
    if np.any(r2 > 1 + _TOL):
        raise ValueError("point lies outside the closed unit disk")
    xi3 = np.sqrt(np.clip(1 - r2, 0, None))
    return SpherePoint(_out(x), _out(y), _out(xi3))


def sphere_to_disk(s: SpherePoint) -> DiskPoint:
    """Vertical projection onto the disk."""
    return DiskPoint(s.xi1, s.xi2)


def sphere_to_anglesI(s: SpherePoint) -> AnglesI:
    xi1, xi2, xi3 = (np.asarray(v, dtype=float) for v in (s.xi1, s.xi2, s.xi3))
    rho = np.hypot(xi1, xi2)
    theta = np.arctan2(rho, xi3)
    phi = np.where(rho <= POLE_EPS, 0.0, np.arctan2(xi2, xi1))
    phi = np.where(phi <= -np.pi, np.pi, phi)
    return AnglesI(_out(theta), _out(phi))


def anglesI_to_sphere(a: AnglesI) -> SpherePoint:
    st = np.sin(a.theta)
    return SpherePoint(
        _out(st * np.cos(a.phi)), _out(st * np.sin(a.phi)), _out(np.cos(a.theta))
    )


def sphere_to_anglesII(s: SpherePoint) -> AnglesII:
    xi1, xi2, xi3 = (np.asarray(v, dtype=float) for v in (s.xi1, s.xi2, s.xi3))
    rho = np.hypot(xi2, xi3)
    theta_p = np.arctan2(rho, xi1)
    phi_p = np.where(rho <= POLE_EPS, np.pi / 2, np.arctan2(np.clip(xi3, 0, None), xi2))
    return AnglesII(_out(theta_p), _out(phi_p))


def anglesII_to_sphere(a: AnglesII) -> SpherePoint:
    st = np.sin(a.theta_p)
    return SpherePoint(
        _out(np.cos(a.theta_p)), _out(st * np.cos(a.phi_p)), _out(st * np.sin(a.phi_p))
    )


def anglesI_to_anglesII(a: AnglesI) -> AnglesII:
    """Direct trigonometric map from system I angles to system II angles."""
    st, ct = np.sin(a.theta), np.cos(a.theta)
    cos_tp = st * np.cos(a.phi)
    # sqrt(1 - sin^2 t cos^2 p), in a form that keeps accuracy near the pole
    sin_tp = np.hypot(st * np.sin(a.phi), ct)
    pole = sin_tp <= POLE_EPS
    safe = np.where(pole, 1.0, sin_tp)
    cos_pp = st * np.sin(a.phi) / safe
    sin_pp = ct / safe
    theta_p = np.arctan2(sin_tp, cos_tp)
    phi_p = np.where(pole, np.pi / 2, np.arctan2(np.clip(sin_pp, 0, None), cos_pp))
    return AnglesII(_out(theta_p), _out(phi_p))


def anglesII_to_anglesI(a: AnglesII) -> AnglesI:
    """Inverse of :func:`anglesI_to_anglesII`.

    ``sin(phi)`` is taken as ``sin t' cos p' / sin t`` so that ``phi`` lands in
    the correct half of ``(-pi, pi]``.
    """
    stp = np.sin(a.theta_p)
    cos_t = stp * np.sin(a.phi_p)
    sin_t = np.hypot(np.cos(a.theta_p), stp * np.cos(a.phi_p))
    pole = sin_t <= POLE_EPS
    safe = np.where(pole, 1.0, sin_t)
    cos_p = np.cos(a.theta_p) / safe
    sin_p = stp * np.cos(a.phi_p) / safe
    theta = np.arctan2(sin_t, cos_t)
    phi = np.where(pole, 0.0, np.arctan2(sin_p, cos_p))
    phi = np.where(phi <= -np.pi, np.pi, phi)
    return AnglesI(_out(theta), _out(phi))


def disk_to_anglesI(p: DiskPoint) -> AnglesI:
    return sphere_to_anglesI(disk_to_sphere(p))


def disk_to_anglesII(p: DiskPoint) -> AnglesII:
    return sphere_to_anglesII(disk_to_sphere(p))

"""Backend selection for the float array recurrences.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
numpy implementation in ``_pykernels`` is used.  Both share coefficient
tables and operation order, so their results are bitwise equal.
"""
from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def backend() -> str:
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def use_backend(name: str) -> None:
    """Switch the process-wide backend; ``name`` is ``"cython"`` or ``"python"``."""
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"backend {name!r} unavailable; choose from {available_backends()}"
        ) from None


def get_module(name: str | None = None):
    return _active if name is None else _BACKENDS[name]


def jacobi(n, a, b, x):
    return _active.jacobi(n, a, b, x)


def gegenbauer(n, lam, x):
    return _active.gegenbauer(n, lam, x)


def legendre(n, x):
    return _active.legendre(n, x)


def chebyshev_u(n, x):
    return _active.chebyshev_u(n, x)

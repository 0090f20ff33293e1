import subprocess
import sys

import numpy as np
import pytest
from scipy import special

from zernbases import kernels

BACKENDS = kernels.available_backends()


@pytest.fixture(params=BACKENDS)
def mod(request):
    return kernels.get_module(request.param)


X = np.linspace(-1, 1, 257)


@pytest.mark.parametrize("n", [0, 1, 2, 7, 20, 30])
def test_against_scipy(mod, n):
    for a in (0, 1, 4):
        np.testing.assert_allclose(mod.jacobi(n, a, 0, X), special.eval_jacobi(n, a, 0, X), rtol=1e-12, atol=1e-12)
    for lam in (1, 3):
        ref = special.eval_gegenbauer(n, lam, X)
        np.testing.assert_allclose(mod.gegenbauer(n, lam, X), ref, rtol=1e-12, atol=1e-12 * np.max(np.abs(ref)))
    np.testing.assert_allclose(mod.legendre(n, X), special.eval_legendre(n, X), rtol=1e-12, atol=1e-12)
    np.testing.assert_allclose(mod.chebyshev_u(n, X), special.eval_chebyu(n, X), rtol=1e-12, atol=1e-12)


def test_backends_agree():
    if len(BACKENDS) < 2:
        pytest.skip("compiled extension not built")
    # same coefficient tables and operation order, so results are bitwise equal
    c, p = kernels.get_module("cython"), kernels.get_module("python")
    x = np.linspace(-1, 1, 1001)
    for n in range(31):
        assert np.array_equal(c.jacobi(n, 2, 0, x), p.jacobi(n, 2, 0, x))
        assert np.array_equal(c.jacobi(n, 0, 3, x), p.jacobi(n, 0, 3, x))
        assert np.array_equal(c.gegenbauer(n, 3, x), p.gegenbauer(n, 3, x))
        assert np.array_equal(c.legendre(n, x), p.legendre(n, x))
        assert np.array_equal(c.chebyshev_u(n, x), p.chebyshev_u(n, x))


def test_shape_preserved(mod):
    x = np.linspace(-1, 1, 12).reshape(3, 4)
    assert mod.legendre(3, x).shape == (3, 4)
    assert mod.jacobi(0, 1, 0, x).shape == (3, 4)
    assert mod.legendre(3, np.array(0.3)).shape == ()
    assert mod.gegenbauer(0, 2, np.array(0.3)).shape == ()


def test_use_backend_switch():
    before = kernels.backend()
    try:
        kernels.use_backend("python")
        assert kernels.backend() == "python"
        with pytest.raises(ValueError):
            kernels.use_backend("fortran")
    finally:
        kernels.use_backend(before)
    assert kernels.backend() == before


def test_fallback_when_extension_missing():
    code = (
        "import sys; sys.modules['zernbases._ckernels'] = None\n"
        "from zernbases import kernels\n"
        "assert kernels.backend() == 'python', kernels.backend()\n"
        "assert kernels.available_backends() == ['python']\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)

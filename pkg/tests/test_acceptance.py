"""End-to-end acceptance criteria, one test per criterion.

Each test records a one-line PASS/FAIL verdict; the lines are printed in the
terminal summary (see ``conftest.py``) and when this file is run as a script.
"""
import json
import time
from fractions import Fraction
from math import comb

import numpy as np
import pytest

from zernbases import cli, serialize
from zernbases.bases import IndexI, enumerate_rung, indices_through, psi, upsilon_I
from zernbases.geometry import AnglesI
from zernbases.interbasis import racah_special_cgc, special_cgc, w_coefficient, w_matrix, w_phase
from zernbases.oracle import (
    QuadratureRule,
    basis_function,
    disk_gram,
    eigen_residual,
    fourier_integral_closed,
    fourier_integral_numeric,
    fourier_integral_series,
    overlap_matrix_numeric,
)
from zernbases.poly2d import BivariatePoly, basis_II_cartesian, norm_const_II_squared
from zernbases.wavefront import WavefrontSpectrum, convert

VERDICTS = {}


def record(num, title, ok, detail):
    VERDICTS[num] = f"{'PASS' if ok else 'FAIL'} criterion {num:>2}: {title} ({detail})"
    print(VERDICTS[num])
    assert ok, VERDICTS[num]


def test_criterion_01_tables(capsys):
    t0 = time.perf_counter()
    code = cli.main(["tables", "--n-max", "4", "--format", "json"])
    doc = json.loads(capsys.readouterr().out)
    mats = serialize.matrices_from_tables_dict(doc)
    elapsed = time.perf_counter() - t0
    ok = code == 0 and len(mats) == 5 and mats[0].entries[0][0].to_complex() == 1
    ok = ok and mats[0].entries[0][0] == w_coefficient(0, 0, 0)
    for w in mats:
        n = w.n
        for n1 in range(n + 1):
            for m in range(-n, n + 1, 2):
                e = w.entry(n1, m)
                c = racah_special_cgc(n, m, n1)
                structural = n % 2 == 0 and m == 0 and n1 % 2 == 1
                ok &= e.magnitude.is_zero() == structural
                if not structural:
                    # the phase is i^n1 (-1)^((m+|m|)/2), times the real CGC sign
                    k = (w_phase(n1, m).k + (2 if c.sign < 0 else 0)) % 4
                    ok &= e.phase.k == k and e.magnitude.radicand == c.radicand
    ok &= elapsed < 1.0
    record(1, "W tables n<=4: phases, zeros, W(0)=1", ok, f"{elapsed:.3f}s")


def test_criterion_02_unitarity():
    t0 = time.perf_counter()
    ok = all(w_matrix(n).is_unitary() for n in range(13))
    elapsed = time.perf_counter() - t0
    record(2, "exact unitarity n<=12", ok and elapsed < 5.0, f"{elapsed:.3f}s")


def test_criterion_03_dual_path():
    t0 = time.perf_counter()
    count, ok = 0, True
    for n in range(13):
        for m in range(-n, n + 1, 2):
            for n1 in range(n + 1):
                ok &= special_cgc(n, m, n1) == racah_special_cgc(n, m, n1)
                count += 1
    elapsed = time.perf_counter() - t0
    record(3, "Racah == 3F2 path n<=12", ok and elapsed < 5.0, f"{count} coefficients, {elapsed:.3f}s")


def test_criterion_04_overlap():
    t0 = time.perf_counter()
    rule = QuadratureRule(order=96)
    worst = max(overlap_matrix_numeric(n, rule).max_abs_error for n in range(9))
    elapsed = time.perf_counter() - t0
    record(4, "half-sphere overlaps n<=8", worst <= 1e-9 and elapsed < 30.0,
           f"max err {worst:.2e}, {elapsed:.3f}s")


def test_criterion_05_orthonormality():
    t0 = time.perf_counter()
    worst = 0.0
    for basis in ("I", "II"):
        funcs = [basis_function(i) for i in indices_through(8, basis)]
        g = disk_gram(funcs, QuadratureRule(order=64))
        worst = max(worst, float(np.max(np.abs(g - np.eye(len(funcs))))))
    elapsed = time.perf_counter() - t0
    record(5, "disk orthonormality rungs<=8", worst <= 1e-10 and elapsed < 30.0,
           f"max err {worst:.2e}, {elapsed:.3f}s")


def test_criterion_06_eigenvalues():
    t0 = time.perf_counter()
    idx = indices_through(12, "I") + indices_through(12, "II")
    ok = all(eigen_residual(i).ok for i in idx)
    elapsed = time.perf_counter() - t0
    record(6, "exact eigenvalues rung<=12", ok and elapsed < 10.0, f"{len(idx)} functions, {elapsed:.3f}s")


def test_criterion_07_fourier():
    t0 = time.perf_counter()
    exact_ok, worst, count = True, 0.0, 0
    for total in range(11):
        for lam in range(total + 1):
            nu = total - lam
            for m in range(-total - 2, total + 3):
                s = fourier_integral_series(lam, nu, m)
                exact_ok &= s == fourier_integral_closed(lam, nu, m)
                worst = max(worst, abs(fourier_integral_numeric(lam, nu, m) - s.to_complex()))
                count += 1
    elapsed = time.perf_counter() - t0
    record(7, "Fourier integral triple agreement", exact_ok and worst <= 1e-11 and elapsed < 10.0,
           f"{count} cases, quad err {worst:.2e}, {elapsed:.3f}s")


def test_criterion_08_reality_conjugation():
    rng = np.random.default_rng(0)
    worst_im, worst_conj = 0.0, 0.0
    for n in range(9):
        theta = rng.uniform(0, np.pi / 2, 100)
        phi = rng.uniform(-np.pi, np.pi, 100)
        ang = AnglesI(theta, phi)
        idx_I, idx_II = enumerate_rung(n)
        vI = np.array([upsilon_I(i, ang) for i in idx_I])
        for j in idx_II:
            coeffs = np.array([w_coefficient(j.n1, j.n2, i.m).to_complex() for i in idx_I])
            worst_im = max(worst_im, float(np.max(np.abs((coeffs @ vI).imag))))
        r = np.sqrt(rng.uniform(0, 1, 100))
        x, y = r * np.cos(phi), r * np.sin(phi)
        for i in idx_I:
            d = psi(IndexI(n, -i.m), x, y) - np.conj(psi(i, x, y))
            worst_conj = max(worst_conj, float(np.max(np.abs(d))))
    record(8, "reality of sum_m W Upsilon^I, conjugation", worst_im <= 1e-10 and worst_conj <= 1e-12,
           f"max |Im| {worst_im:.2e}, conj err {worst_conj:.2e}")


def test_criterion_09_roundtrip():
    rng = np.random.default_rng(9)
    worst = 0.0
    for trial in range(5):
        k = len(indices_through(10, "I"))
        s = WavefrontSpectrum.from_vector("I", 10, rng.normal(size=k) + 1j * rng.normal(size=k))
        back = convert(convert(s, "II"), "I")
        worst = max(worst, float(np.max(np.abs(back.vector() - s.vector()))))
    record(9, "I->II->I round trip rung<=10", worst <= 1e-12, f"max err {worst:.2e}")


def _cheb_u_explicit(n):
    x = BivariatePoly.x()
    return sum(
        ((x * 2) ** (n - 2 * k) * ((-1) ** k * comb(n - k, k)) for k in range(n // 2 + 1)),
        BivariatePoly(),
    )


def test_criterion_10_chebyshev():
    ok = True
    for n2 in range(13):
        pair = basis_II_cartesian(0, n2)
        ok &= pair.poly_re == _cheb_u_explicit(n2) and pair.poly_im.is_zero()
        # C_{0,n2}^2 = (n2+1) n2! / (pi (n2+1)!) = 1/pi
        ok &= pair.norm_factor_squared == norm_const_II_squared(0, n2) == Fraction(1)
    record(10, "basis II (0,n2) = C U_n2(x)", ok, "n2<=12, exact")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))

"""Verification suites run by ``zernbases verify``.

Each suite returns a :class:`SuiteReport` of per-check results with the worst
error seen; exact checks report an error of 0 when they pass.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .bases import IndexI, enumerate_rung, indices_through, psi_I, upsilon_I
from .geometry import AnglesI
from .interbasis import racah_special_cgc, special_cgc, w_coefficient, w_matrix
from .oracle import (
    QuadratureRule,
    basis_function,
    disk_gram,
    eigen_residual,
    fourier_integral_closed,
    fourier_integral_numeric,
    fourier_integral_series,
    overlap_matrix_numeric,
)

SUITES = ("orthonormality", "unitarity", "eigenvalue", "overlap", "fourier", "symmetry")

DEFAULT_TOLERANCE = {
    "orthonormality": 1e-10,
    "unitarity": 0.0,
    "eigenvalue": 0.0,
    "overlap": 1e-9,
    "fourier": 1e-11,
    "symmetry": 1e-10,
}
DEFAULT_ORDER = {"orthonormality": 64, "overlap": 96}


@dataclass
class CheckResult:
    name: str
    passed: bool
    worst_error: float
    tolerance: float
    exact: bool = False
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    n_max: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def worst_error(self) -> float:
        return max((c.worst_error for c in self.checks), default=0.0)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "passed": self.passed,
            "worst_error": self.worst_error,
            "checks": [asdict(c) for c in self.checks],
        }


def _check(name, err, tol, exact=False, detail=""):
    return CheckResult(name, bool(err <= tol), float(err), float(tol), exact, detail)


def _orthonormality(n_max, tol, order, **_):
    rule = QuadratureRule(order=order)
    out = []
    for basis in ("I", "II"):
        funcs = [basis_function(i) for i in indices_through(n_max, basis)]
        g = disk_gram(funcs, rule)
        err = float(np.max(np.abs(g - np.eye(len(funcs)))))
        out.append(_check(f"basis {basis} gram", err, tol, detail=f"{len(funcs)} functions"))
    return out


def _unitarity_rung(n, **_):
    w = w_matrix(n)
    ok = w.is_unitary() and all(r == 1 for r in w.row_norms_squared())
    err = 0.0 if ok else float(np.max(np.abs(w.to_complex() @ w.to_complex().conj().T - np.eye(n + 1))))
    return [CheckResult(f"W({n}) W({n})^dagger = I", ok, err, 0.0, True)]


def _eigenvalue_rung(n, **_):
    idx_I, idx_II = enumerate_rung(n)
    bad = [i for i in idx_I + idx_II if not eigen_residual(i).ok]
    return [
        CheckResult(
            f"rung {n} eigenvalue {n * (n + 2)}",
            not bad,
            0.0 if not bad else 1.0,
            0.0,
            True,
            "" if not bad else f"nonzero residual for {[i.as_tuple() for i in bad]}",
        )
    ]


def _overlap_rung(n, tol, order, **_):
    rep = overlap_matrix_numeric(n, QuadratureRule(order=order))
    return [_check(f"overlap W({n})", rep.max_abs_error, tol)]


def _fourier_rung(n, tol, **_):
    """All ``(lam, nu)`` with ``lam + nu = n`` and every ``m`` of matching parity."""
    exact_bad = []
    worst = 0.0
    for lam in range(n + 1):
        nu = n - lam
        for m in range(-n - 2, n + 3):
            s = fourier_integral_series(lam, nu, m)
            if s != fourier_integral_closed(lam, nu, m):
                exact_bad.append((lam, nu, m))
            worst = max(worst, abs(fourier_integral_numeric(lam, nu, m) - s.to_complex()))
    return [
        CheckResult(f"lam+nu={n} series == closed form", not exact_bad, 0.0 if not exact_bad else 1.0, 0.0, True,
                    "" if not exact_bad else str(exact_bad)),
        _check(f"lam+nu={n} quadrature vs exact", worst, tol),
    ]


def _symmetry_rung(n, tol, rng, **_):
    out = []
    sym_bad, zero_bad, path_bad, accidental = [], [], [], []
    for m in range(-n, n + 1, 2):
        for n1 in range(n + 1):
            c = special_cgc(n, m, n1)
            if c != racah_special_cgc(n, m, n1):
                path_bad.append((m, n1))
            flipped = special_cgc(n, -m, n1)
            if c != (flipped if (n - n1) % 2 == 0 else -flipped):
                sym_bad.append((m, n1))
            structural = n % 2 == 0 and m == 0 and n1 % 2 == 1
            if structural and not c.is_zero():
                zero_bad.append((m, n1))
            elif c.is_zero() and not structural:
                accidental.append((m, n1))
    for name, bad in (("Racah path == 3F2 path", path_bad),
                      ("C(m) = (-1)^n2 C(-m)", sym_bad)):
        out.append(CheckResult(f"rung {n} {name}", not bad, 0.0 if not bad else 1.0, 0.0, True,
                               "" if not bad else str(bad)))
    # Zeros at even n, m = 0, odd n1 are forced by symmetry; a few other
    # coefficients vanish too, e.g. C^{2,0}_{3,-2;3,2}.  Those are reported only.
    detail = f"violations {zero_bad}" if zero_bad else ""
    if accidental:
        detail = (detail + "; " if detail else "") + f"nonstructural zeros (m, n1): {accidental}"
    out.append(CheckResult(f"rung {n} structural zeros", not zero_bad,
                           0.0 if not zero_bad else 1.0, 0.0, True, detail))
    # conjugation and reality at random interior points
    r = np.sqrt(rng.uniform(0, 1, 100)) * 0.999
    phi = rng.uniform(-np.pi, np.pi, 100)
    conj_err = 0.0
    for m in range(-n, n + 1, 2):
        a, b = psi_I(IndexI(n, m), r, phi), psi_I(IndexI(n, -m), r, phi)
        conj_err = max(conj_err, float(np.max(np.abs(b - np.conj(a)))))
    out.append(_check(f"rung {n} psi_I(n,-m) = conj psi_I(n,m)", conj_err, 1e-12))
    ang = AnglesI(np.arcsin(r), phi)
    idx_I, _ = enumerate_rung(n)
    vI = np.array([upsilon_I(i, ang) for i in idx_I])
    imag = 0.0
    for n1 in range(n, -1, -1):
        coeffs = np.array([w_coefficient(n1, n - n1, m).to_complex() for m in range(n, -n - 1, -2)])
        imag = max(imag, float(np.max(np.abs((coeffs @ vI).imag))))
    out.append(_check(f"rung {n} sum_m W Upsilon^I real", imag, tol))
    return out


_PER_RUNG = {
    "unitarity": _unitarity_rung,
    "eigenvalue": _eigenvalue_rung,
    "overlap": _overlap_rung,
    "fourier": _fourier_rung,
    "symmetry": _symmetry_rung,
}


def run_suite(
    suite: str,
    n_max: int,
    tolerance: float | None = None,
    order: int | None = None,
    seed: int = 0,
    threads: int = 1,
) -> SuiteReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    tol = DEFAULT_TOLERANCE[suite] if tolerance is None else tolerance
    order = order or DEFAULT_ORDER.get(suite, 64)
    report = SuiteReport(suite, n_max)
    if suite == "orthonormality":
        report.checks.extend(_orthonormality(n_max, tol, order))
        return report
    fn = _PER_RUNG[suite]
    # one generator per rung keeps results independent of thread count
    seeds = np.random.SeedSequence(seed).spawn(n_max + 1)

    def job(n):
        return fn(n, tol=tol, order=order, rng=np.random.default_rng(seeds[n]))

    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            results = list(ex.map(job, range(n_max + 1)))
    else:
        results = [job(n) for n in range(n_max + 1)]
    for r in results:
        report.checks.extend(r)
    return report

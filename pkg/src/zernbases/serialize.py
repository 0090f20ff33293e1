"""JSON and CSV renderings of W tables, grids, spectra and verify reports.

An exact entry is the integer 4-tuple ``(phase_k, sign, num, den)`` standing
for ``i**phase_k * sign * sqrt(num/den)``.  The schemas in ``docs/schema``
describe the JSON layouts.
"""
from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

from .exact_num import ExactComplex, QuarterPhase, SignedSqrtRational
from .interbasis import InterbasisMatrix, w_matrix
from .wavefront import FitResult, GridSample, WavefrontSpectrum, make_index

TABLE_CSV_HEADER = ["n", "n1", "n2", "m", "phase_k", "sign", "num", "den", "re", "im"]
GRID_CSV_HEADER = ["x", "y", "re", "im", "in_disk"]


def exact_to_dict(e: ExactComplex) -> dict:
    z = e.to_complex()
    return {
        "phase_k": e.phase.k,
        "sign": e.magnitude.sign,
        "num": e.magnitude.radicand.numerator,
        "den": e.magnitude.radicand.denominator,
        "re": z.real,
        "im": z.imag,
    }


def exact_from_fields(phase_k, sign, num, den) -> ExactComplex:
    return ExactComplex(
        QuarterPhase(int(phase_k)), SignedSqrtRational(int(sign), Fraction(int(num), int(den)))
    )


def tables_to_dict(n_max: int) -> dict:
    rungs = []
    for n in range(n_max + 1):
        w = w_matrix(n)
        rungs.append(
            {
                "n": n,
                "rows": [list(r) for r in w.rows],
                "cols": w.cols,
                "entries": [[exact_to_dict(e) for e in row] for row in w.entries],
            }
        )
    return {"kind": "w_tables", "n_max": n_max, "rungs": rungs}


def tables_to_csv(n_max: int) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(TABLE_CSV_HEADER)
    for n in range(n_max + 1):
        w = w_matrix(n)
        for (n1, n2), row in zip(w.rows, w.entries):
            for m, e in zip(w.cols, row):
                d = exact_to_dict(e)
                wr.writerow([n, n1, n2, m] + [d[k] for k in TABLE_CSV_HEADER[4:8]]
                            + [repr(d["re"]), repr(d["im"])])
    return buf.getvalue()


def matrices_from_tables_dict(data: dict) -> list[InterbasisMatrix]:
    out = []
    for rung in data["rungs"]:
        entries = tuple(
            tuple(exact_from_fields(e["phase_k"], e["sign"], e["num"], e["den"]) for e in row)
            for row in rung["entries"]
        )
        out.append(InterbasisMatrix(rung["n"], entries))
    return out


def matrices_from_tables_csv(text: str) -> list[InterbasisMatrix]:
    by_n: dict[int, dict[tuple[int, int], ExactComplex]] = {}
    for row in csv.DictReader(io.StringIO(text)):
        n = int(row["n"])
        by_n.setdefault(n, {})[(int(row["n1"]), int(row["m"]))] = exact_from_fields(
            row["phase_k"], row["sign"], row["num"], row["den"]
        )
    out = []
    for n in sorted(by_n):
        cells = by_n[n]
        entries = tuple(
            tuple(cells[(n1, m)] for m in range(n, -n - 1, -2)) for n1 in range(n, -1, -1)
        )
        out.append(InterbasisMatrix(n, entries))
    return out


def _num(v: float):
    return None if math.isnan(v) else v


def grid_to_dict(g: GridSample, basis: str, index) -> dict:
    return {
        "kind": "grid",
        "basis": basis,
        "index": list(index),
        "nx": g.nx,
        "ny": g.ny,
        "x": [float(v) for v in g.x.ravel()],
        "y": [float(v) for v in g.y.ravel()],
        "values": [
            [float(v.real), float(v.imag)] if ok else None
            for v, ok in zip(g.values.ravel(), g.mask.ravel())
        ],
        "mask": [bool(v) for v in g.mask.ravel()],
    }


def grid_to_csv(g: GridSample) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(GRID_CSV_HEADER)
    for x, y, v, ok in zip(g.x.ravel(), g.y.ravel(), g.values.ravel(), g.mask.ravel()):
        if ok:
            wr.writerow([repr(float(x)), repr(float(y)), repr(float(v.real)), repr(float(v.imag)), 1])
        else:
            wr.writerow([repr(float(x)), repr(float(y)), "", "", 0])
    return buf.getvalue()


def spectrum_to_dict(spec: WavefrontSpectrum) -> dict:
    return {
        "kind": "spectrum",
        "basis": spec.basis,
        "max_rung": spec.max_rung,
        "convention": spec.convention,
        "coeffs": [
            {"index": list(i.as_tuple()), "re": float(spec.coeffs.get(i, 0j).real),
             "im": float(spec.coeffs.get(i, 0j).imag)}
            for i in spec.indices()
        ],
    }


def spectrum_from_dict(data: dict) -> WavefrontSpectrum:
    basis = data["basis"]
    coeffs = {}
    for c in data.get("coeffs", []):
        idx = make_index(basis, c["index"])
        if idx in coeffs:
            raise ValueError(f"duplicate index {idx.as_tuple()}")
        coeffs[idx] = complex(c.get("re", 0.0), c.get("im", 0.0))
    return WavefrontSpectrum(basis, int(data["max_rung"]), coeffs, data.get("convention", "disk"))


def fit_to_dict(res: FitResult) -> dict:
    d = spectrum_to_dict(res.spectrum)
    d["fit"] = {"rms_residual": res.rms_residual, "n_samples": res.n_samples, "rank": res.rank}
    return d


def read_samples(text: str):
    """Samples from CSV (``x,y,re[,im]``) or JSON (``[[x, y, re, im], ...]`` or
    ``{"samples": [...]}``)."""
    stripped = text.lstrip()
    rows = []
    if stripped.startswith("[") or stripped.startswith("{"):
        data = json.loads(text)
        if isinstance(data, dict):
            data = data["samples"]
        for s in data:
            if isinstance(s, dict):
                rows.append((s["x"], s["y"], s.get("re", 0.0), s.get("im", 0.0)))
            else:
                rows.append((s[0], s[1], s[2], s[3] if len(s) > 3 else 0.0))
    else:
        for r in csv.DictReader(io.StringIO(text)):
            rows.append((r["x"], r["y"], r["re"], r.get("im") or 0.0))
    xs = [float(r[0]) for r in rows]
    ys = [float(r[1]) for r in rows]
    vs = [complex(float(r[2]), float(r[3])) for r in rows]
    return xs, ys, vs


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"

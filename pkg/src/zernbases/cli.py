"""Command-line interface: ``zernbases {tables,eval,convert,fit,verify}``."""
from __future__ import annotations

import argparse
import sys

from . import serialize
from .verify import SUITES, run_suite
from .wavefront import RankDeficientError, convert, fit, make_index, sample_grid


def _parse_index(text: str) -> tuple[int, int]:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"index must look like 'a,b', got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"index must be two integers, got {text!r}") from None


def _parse_grid(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    try:
        nx, ny = (int(p) for p in parts) if len(parts) == 2 else (int(parts[0]),) * 2
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like 'NXxNY' or 'N', got {text!r}") from None
    return nx, ny


def _write(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_tables(args) -> int:
    if args.format == "json":
        _write(args, serialize.dumps(serialize.tables_to_dict(args.n_max)))
    else:
        _write(args, serialize.tables_to_csv(args.n_max))
    return 0


def cmd_eval(args) -> int:
    idx = make_index(args.basis, args.index)
    nx, ny = args.grid
    g = sample_grid(idx, nx, ny, threads=args.threads)
    if args.format == "json":
        _write(args, serialize.dumps(serialize.grid_to_dict(g, args.basis, idx.as_tuple())))
    else:
        _write(args, serialize.grid_to_csv(g))
    return 0


def cmd_convert(args) -> int:
    import json

    spec = serialize.spectrum_from_dict(json.loads(_read(args.input)))
    out = convert(spec, args.target)
    _write(args, serialize.dumps(serialize.spectrum_to_dict(out)))
    return 0


def cmd_fit(args) -> int:
    xs, ys, vs = serialize.read_samples(_read(args.input))
    try:
        res = fit(xs, ys, vs, args.basis, args.n_max)
    except RankDeficientError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write(args, serialize.dumps(serialize.fit_to_dict(res)))
    return 0


def cmd_verify(args) -> int:
    suites = SUITES if "all" in args.suite else args.suite
    reports = [
        run_suite(s, args.n_max, args.tolerance, args.order, args.seed, args.threads)
        for s in suites
    ]
    passed = all(r.passed for r in reports)
    _write(
        args,
        serialize.dumps({"kind": "verify", "passed": passed, "suites": [r.to_dict() for r in reports]}),
    )
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zernbases",
        description="Zernike bases I and II on the unit disk and their interbasis matrices.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--output", "-o", default="-", help="output file (default: stdout)")
        sp.add_argument("--threads", type=int, default=1)

    t = sub.add_parser("tables", help="emit exact W matrices for rungs 0..n-max")
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--format", choices=("json", "csv"), default="json")
    common(t)
    t.set_defaults(func=cmd_tables)

    e = sub.add_parser("eval", help="sample one basis function on a Cartesian grid")
    e.add_argument("--basis", choices=("I", "II"), required=True)
    e.add_argument("--index", type=_parse_index, required=True, help="'n,m' or 'n1,n2'")
    e.add_argument("--grid", type=_parse_grid, default=(64, 64), help="NXxNY (default 64x64)")
    e.add_argument("--format", choices=("json", "csv"), default="csv")
    common(e)
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("convert", help="convert a spectrum JSON to the other basis")
    c.add_argument("--input", "-i", default="-")
    c.add_argument("--target", choices=("I", "II"), required=True)
    common(c)
    c.set_defaults(func=cmd_convert)

    f = sub.add_parser("fit", help="least-squares fit of sampled wavefront values")
    f.add_argument("--input", "-i", default="-", help="CSV x,y,re[,im] or JSON samples")
    f.add_argument("--basis", choices=("I", "II"), required=True)
    f.add_argument("--n-max", type=int, required=True)
    common(f)
    f.set_defaults(func=cmd_fit)

    v = sub.add_parser("verify", help="run verification suites; exit 1 on failure")
    v.add_argument("--suite", action="append", choices=SUITES + ("all",), required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--tolerance", type=float, default=None)
    v.add_argument("--order", type=int, default=None, help="quadrature order")
    v.add_argument("--seed", type=int, default=0)
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "n_max", 0) is not None and getattr(args, "n_max", 0) < 0:
        print("error: --n-max must be nonnegative", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

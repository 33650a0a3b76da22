"""Command-line front end.

Exit codes: 0 success (or verification pass), 1 verification failure,
2 invalid input.  Data goes to stdout (JSON or CSV), diagnostics to stderr.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import altforms, arith, cubes, localfactors, qforms, series


def _jsonable(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else v.numerator
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _emit(record, fmt):
    record = _jsonable(record)
    if fmt == "json":
        print(json.dumps(record))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        keys = list(record)
        writer.writerow(keys)
        writer.writerow([json.dumps(record[k]) if isinstance(record[k], (dict, list))
                         else record[k] for k in keys])
        sys.stdout.write(buf.getvalue())


def _report_exit(report, fmt):
    _emit(report, fmt)
    return 0 if report["status"] == "pass" else 1


def _parse_cube(text):
    parts = text.split(",")
    if len(parts) != 8:
        raise argparse.ArgumentTypeError("cube literal needs 8 comma-separated integers")
    return cubes.Cube(*(int(p) for p in parts))


def _parse_complex(text):
    try:
        return complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a complex literal: {text}") from exc


def _parse_disc_list(text):
    return [int(p) for p in text.split(",") if p.strip()]


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cubeforms",
        description="Exact computations on quadratic forms, 2x2x2 cubes, "
                    "alternating-form pairs and local L-factors.")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classnum", help="class number of a negative fundamental discriminant")
    p.add_argument("--disc", type=int, required=True)

    p = sub.add_parser("sqrtcount", help="A(d, a): solutions of x^2 = d (mod a)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mod", type=int, required=True)

    pc = sub.add_parser("cube", help="cube operations")
    cs = pc.add_subparsers(dest="cube_command", required=True)
    p = cs.add_parser("construct")
    for flag in ("--disc", "--m", "--n", "--x", "--y"):
        p.add_argument(flag, type=int, required=True)
    p = cs.add_parser("invariants")
    p.add_argument("--cube", type=_parse_cube, required=True,
                   help="a,b,c,d,e,f,g,h (front face row-major, then back face)")
    p = cs.add_parser("orbits")
    for flag in ("--disc", "--m", "--n"):
        p.add_argument(flag, type=int, required=True)

    pv = sub.add_parser("verify", help="verification suites")
    vs = pv.add_subparsers(dest="verify_command", required=True)
    p = vs.add_parser("prop2")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--limit", type=int, default=5000)
    p = vs.add_parser("ptilde2")
    p.add_argument("--disc", type=int, required=True)
    p.add_argument("--lmax", type=int, default=6)
    p = vs.add_parser("composition")
    p.add_argument("--disc", type=int, required=True)
    p = vs.add_parser("local")
    p.add_argument("--order", type=int, default=40)
    p = vs.add_parser("fusion")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=10000)
    p = vs.add_parser("characters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=10000)

    pz = sub.add_parser("zeta", help="truncated double-sum evaluation")
    zs = pz.add_subparsers(dest="zeta_command", required=True)
    p = zs.add_parser("shintani")
    p.add_argument("--s", type=_parse_complex, required=True)
    p.add_argument("--w", type=_parse_complex, required=True)
    p.add_argument("--amax", type=int, default=100)
    p.add_argument("--dmax", type=int, default=100)
    p = zs.add_parser("wmds")
    p.add_argument("--s", type=_parse_complex, required=True)
    p.add_argument("--w", type=_parse_complex, required=True)
    p.add_argument("--mmax", type=int, default=100)
    p.add_argument("--dset", type=_parse_disc_list, required=True,
                   help="comma-separated odd discriminants")

    return ap


def _dispatch(args):
    fmt = args.format
    if args.command == "classnum":
        h = arith.class_number(args.disc)
        _emit({"disc": args.disc, "h": h}, fmt)
        return 0
    if args.command == "sqrtcount":
        _emit({"d": args.d, "mod": args.mod,
               "count": arith.count_sqrt_mod(args.d, args.mod)}, fmt)
        return 0
    if args.command == "cube":
        if args.cube_command == "construct":
            A = cubes.construct_cube(args.disc, args.m, args.n, args.x, args.y)
            _emit({"cube": list(A),
                   "Q1": list(cubes.qform(A, 1)),
                   "Q2": list(cubes.qform(A, 2)),
                   "Q3": list(cubes.qform(A, 3)),
                   "disc": cubes.disc(A)}, fmt)
            return 0
        if args.cube_command == "invariants":
            t = cubes.invariant_tuple(args.cube)
            _emit({"disc": t.D, "m": t.m, "n": t.n, "x": t.x, "y": t.y}, fmt)
            return 0
        if args.cube_command == "orbits":
            B = cubes.count_orbits(args.disc, args.m, args.n)
            _emit({"disc": args.disc, "m": args.m, "n": args.n, "orbits": B}, fmt)
            return 0
    if args.command == "verify":
        if args.verify_command == "prop2":
            return _report_exit(series.verify_prop2(args.disc, args.limit), fmt)
        if args.verify_command == "ptilde2":
            return _report_exit(series.verify_ptilde2(args.disc, args.lmax), fmt)
        if args.verify_command == "composition":
            return _report_exit(cubes.verify_composition_law(args.disc), fmt)
        if args.verify_command == "local":
            return _report_exit(
                localfactors.verify_local_identities(order=args.order), fmt)
        if args.verify_command == "fusion":
            return _report_exit(
                altforms.verify_fusion(seed=args.seed, cases=args.cases), fmt)
        if args.verify_command == "characters":
            return _report_exit(
                cubes.verify_characters(seed=args.seed, cases=args.cases), fmt)
    if args.command == "zeta":
        if args.zeta_command == "shintani":
            z = series.shintani_Z(args.s, args.w, args.amax, args.dmax)
            _emit({"s": z.s, "w": z.w, "amax": z.amax, "dmax": z.dmax,
                   "value": z.value, "xi1": z.xi1, "xi2": z.xi2}, fmt)
            return 0
        if args.zeta_command == "wmds":
            v = series.wmds_Z(args.s, args.w, args.mmax, args.dset)
            _emit({"s": args.s, "w": args.w, "mmax": args.mmax,
                   "dset": args.dset, "value": v}, fmt)
            return 0
    raise AssertionError("unhandled command")


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _dispatch(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

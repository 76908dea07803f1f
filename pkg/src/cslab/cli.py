"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import Counter
from typing import Optional, Sequence

from . import action, render, series, spitzer, verify
from .lattice import (
    LatticePath,
    augment,
    deaugment,
    enumerate_bridges,
    enumerate_catalan,
    steps_above_axis,
    up_steps_below_axis,
    validate,
)

CSV_HELP = """\
CSV columns:
  enumerate        index,k,kind,steps
  count --by-type  type,count      (type = comma-separated points per level)
  count --by-below-axis   up_steps_below,count
  count --by-above-axis   steps_above,count
  genfun           exps,coef       (exps = space-separated exponents of x1..xR)
  genfun --continuant --ones       n,value
"""


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _parse_path(steps: str, k: int) -> LatticePath:
    """Accept either a k-Catalan path or an augmented one; the end height tells them apart."""
    steps = steps.strip().upper()
    for kind in ("augmented", "catalan"):
        try:
            p = LatticePath(k, steps, kind)
        except ValueError as exc:
            raise UsageError(str(exc))
        if validate(p):
            return p
    raise UsageError(f"{steps!r} is neither a {k}-Catalan path nor an augmented one")


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def cmd_enumerate(args, out):
    gen = enumerate_bridges(args.n, args.k) if args.bridges else enumerate_catalan(args.n, args.k)
    if args.format == "csv":
        w = _writer(out)
        w.writerow(["index", "k", "kind", "steps"])
        for i, p in enumerate(gen):
            w.writerow([i, p.k, p.kind, p.steps])
    elif args.format == "json":
        for p in gen:
            out.write(json.dumps(p.to_json()) + "\n")
    else:
        for p in gen:
            out.write(p.steps + "\n")
    return 0


def cmd_count(args, out):
    w = _writer(out)
    if args.by_type:
        c = spitzer.type_census(args.n, args.k)
        w.writerow(["type", "count"])
        for t in sorted(c):
            w.writerow([",".join(map(str, t)), c[t]])
    elif args.by_below_axis:
        c = Counter(up_steps_below_axis(p) for p in enumerate_bridges(args.n, args.k))
        w.writerow(["up_steps_below", "count"])
        for r in sorted(c):
            w.writerow([r, c[r]])
    elif args.by_above_axis:
        if args.k != 2:
            raise UsageError("--by-above-axis needs --k 2")
        c = Counter(steps_above_axis(p) for p in enumerate_bridges(args.n, 2))
        w.writerow(["steps_above", "count"])
        for r in sorted(c):
            w.writerow([r, c[r]])
    else:
        out.write(f"{sum(1 for _ in enumerate_catalan(args.n, args.k))}\n")
    return 0


def _emit_perm(perm, fmt, out):
    if fmt == "json":
        out.write(json.dumps(list(perm)) + "\n")
    else:
        out.write(",".join(map(str, perm)) + "\n")


def cmd_perm(args, out):
    if args.reconstruct:
        if not args.perm:
            raise UsageError("--reconstruct needs --perm")
        path = spitzer.reconstruct(_ints(args.perm), args.k)
        if args.format == "json":
            out.write(json.dumps(path.to_json()) + "\n")
        else:
            out.write(path.steps + "\n")
        return 0
    if not args.path:
        raise UsageError("perm needs --path (or --reconstruct --perm)")
    p = _parse_path(args.path, args.k)
    catalan = deaugment(p) if p.kind == "augmented" else p
    if args.short:
        _emit_perm(spitzer.short_csp(catalan), args.format, out)
    else:
        _emit_perm(spitzer.full_csp(augment(catalan)), args.format, out)
    return 0


def cmd_types(args, out):
    out.write(f"{series.type_count(_ints(args.vec), args.k)}\n")
    return 0


def cmd_genfun(args, out):
    if args.continuant:
        if args.ones:
            w = _writer(out)
            w.writerow(["n", "value"])
            for m, v in enumerate(series.continuant_ones(args.k, args.n)):
                w.writerow([m, v])
            return 0
        poly = series.continuant_poly(args.k, args.n)
        out.write((json.dumps(poly.to_json()) if args.format == "json" else poly.format()) + "\n")
        return 0
    if args.r is None or args.deg is None:
        raise UsageError("genfun needs --r and --deg (or --continuant)")
    s = series.t_series(args.k, args.r, args.deg)
    if args.format == "json":
        out.write(json.dumps(s.to_json()) + "\n")
    else:
        w = _writer(out)
        w.writerow(["exps", "coef"])
        for e, c in s.poly.sorted_terms():
            w.writerow([" ".join(map(str, e)), c])
    return 0


def cmd_orbits(args, out):
    cls = action.get_class(args.cls, args.k)
    if args.series:
        deg = args.deg if args.deg is not None else args.n
        s = action.orbit_series(cls, deg)
        out.write(f"class {cls.name}, through x^{deg}\n")
        out.write("P: " + ", ".join(str(c) for c in s.P.coeffs[1:]) + "\n")
        out.write("O: " + ", ".join(str(c) for c in s.O.coeffs[1:]) + "\n")
        out.write("O(x,y):\n")
        for line in action.format_y_table(s.Oxy):
            out.write(f"  x^{line}\n")
        out.write("P(x,y):\n")
        for line in action.format_y_table(s.Pxy):
            out.write(f"  x^{line}\n")
        if not s.agrees():
            out.write("closed forms DISAGREE with the counts\n")
            return 1
        out.write("closed forms agree with the counts\n")
        return 0
    for rec in action.orbits(cls, args.n, with_members=args.members):
        out.write(json.dumps(rec.to_json()) + "\n")
    return 0


def cmd_verify(args, out):
    results = verify.run_suite(args.suite, args.max)
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        out.write(f"{status} {r.name}: {r.detail}\n")
        for line in r.echo:
            out.write(f"  {line}\n")
        failed += not r.ok
    out.write(f"{len(results) - failed}/{len(results)} cases passed\n")
    return 1 if failed else 0


def cmd_render(args, out):
    if bool(args.path) == bool(args.tree):
        raise UsageError("render needs exactly one of --path and --tree")
    if args.path:
        if args.k is None:
            raise UsageError("render --path needs --k")
        svg = render.path_svg(_parse_path(args.path, args.k))
    else:
        svg = render.tree_svg(_ints(args.tree))
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(svg)
    out.write(f"wrote {args.svg}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cslab",
        description="Catalan paths, Catalan-Spitzer permutations, Foata-Strehl trees and orbit series.",
        epilog=CSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def kn(p, n_required=True):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=n_required)

    p = sub.add_parser("enumerate", help="stream k-Catalan paths or bridges")
    kn(p)
    p.add_argument("--bridges", action="store_true")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count paths, optionally tabulated by a statistic")
    kn(p)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--by-type", action="store_true")
    g.add_argument("--by-below-axis", action="store_true")
    g.add_argument("--by-above-axis", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("perm", help="full/short permutation of a path, or the inverse map")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--path")
    p.add_argument("--short", action="store_true")
    p.add_argument("--reconstruct", action="store_true")
    p.add_argument("--perm")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_perm)

    p = sub.add_parser("types", help="number of augmented paths of a given type")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--vec", required=True)
    p.set_defaults(func=cmd_types)

    p = sub.add_parser("genfun", help="type generating function coefficients or continuants")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--deg", type=int)
    p.add_argument("--continuant", action="store_true")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--ones", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("orbits", help="orbits of the restricted Foata-Strehl action")
    p.add_argument("--class", dest="cls", choices=("all", "short-csp", "short-k-csp"), required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--members", action="store_true")
    p.add_argument("--series", action="store_true")
    p.add_argument("--deg", type=int)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="write an SVG drawing of a path or a tree")
    p.add_argument("--path")
    p.add_argument("--tree")
    p.add_argument("--k", type=int)
    p.add_argument("--svg", required=True)
    p.set_defaults(func=cmd_render)
    return ap


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except action.FlipClosureError as exc:
        print(f"cslab: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError, KeyError) as exc:
        print(f"cslab: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

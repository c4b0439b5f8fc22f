"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from collections import Counter
from fractions import Fraction
from typing import Sequence

from .core import (
    Coloring,
    HypercolorError,
    Hypergraph,
    InvariantViolation,
    Multigraph,
    parameters,
    parse_coloring,
    parse_instance,
    write_instance,
)
from .dynamic import dynamic_bound, dynamic_color
from .instance_gen import GenParams, ensemble, random_graph, random_hypergraph
from .theorem_one import UseKPlusOne, color_k, color_k_plus_1
from .verify import verify_dynamic, verify_proper_graph, verify_proper_hypergraph

CSV_HEADER = ["instance_id", "n", "m", "delta", "Delta", "k", "colors_used", "rotations", "verified"]


class UsageError(HypercolorError):
    pass


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(data: bytes, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _summary(text: str, out: str | None) -> None:
    # stdout carries the coloring unless it went to a file
    stream = sys.stderr if out is None or out == "-" else sys.stdout
    print(text, file=stream)


def color_hypergraph(h: Hypergraph, mode: str = "auto",
                     counters: Counter | None = None) -> tuple[Coloring, int]:
    """Color ``h`` per ``mode``; returns the coloring and its bound."""
    k = parameters(h).k
    if mode == "k1":
        return color_k_plus_1(h, counters), k + 1
    try:
        return color_k(h, counters=counters), k
    except UseKPlusOne:
        if mode == "k":
            raise
        return color_k_plus_1(h, counters), k + 1


def cmd_color(args) -> int:
    h = parse_instance(_read(args.file))
    if not isinstance(h, Hypergraph):
        raise UsageError("color expects a hypergraph ('h' header)")
    coloring, bound = color_hypergraph(h, args.mode)
    _emit(write_instance(coloring), args.output)
    _summary(f"colors={coloring.used()} bound={bound}", args.output)
    return 0


def cmd_dynamic(args) -> int:
    g = parse_instance(_read(args.file))
    if not isinstance(g, Multigraph):
        raise UsageError("dynamic expects a graph ('g' header)")
    coloring = dynamic_color(g)
    _emit(write_instance(coloring), args.output)
    _summary(f"colors={coloring.used()} bound={coloring.palette}", args.output)
    return 0


def cmd_verify(args) -> int:
    obj = parse_instance(_read(args.instance))
    coloring = parse_coloring(_read(args.coloring))
    kind = args.kind or ("hyper" if isinstance(obj, Hypergraph) else "graph")
    if (kind == "hyper") != isinstance(obj, Hypergraph):
        raise UsageError(f"--kind {kind} does not match the instance type")
    check = {"hyper": verify_proper_hypergraph, "graph": verify_proper_graph,
             "dynamic": verify_dynamic}[kind]
    report = check(obj, coloring)
    if report.ok:
        print("ok")
        return 0
    for line in report.lines():
        print(line)
    return 1


def _kv(tokens: Sequence[str]) -> dict[str, str]:
    out = {}
    for tok in tokens:
        key, sep, val = tok.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {tok!r}")
        out[key] = val
    return out


def _int(kv: dict, key: str, default=None) -> int:
    if key not in kv:
        if default is None:
            raise UsageError(f"missing {key}=...")
        return default
    try:
        return int(kv[key])
    except ValueError:
        raise UsageError(f"{key} must be an integer") from None


def cmd_gen(args) -> int:
    kv = _kv(args.params)
    n = _int(kv, "n")
    if args.what == "hyper":
        unknown = set(kv) - {"n", "m", "lo", "hi", "cap"}
        if unknown:
            raise UsageError(f"unknown parameters {sorted(unknown)}")
        lo = _int(kv, "lo", min(3, max(n, 2)))
        hi = _int(kv, "hi", max(lo, min(3, n)))
        cap = _int(kv, "cap", 0) or None
        try:
            p = GenParams(n, _int(kv, "m"), (lo, hi), cap, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        obj = random_hypergraph(p)
    else:
        unknown = set(kv) - {"n", "p"}
        if unknown:
            raise UsageError(f"unknown parameters {sorted(unknown)}")
        try:
            prob = Fraction(kv.get("p", "1/2"))
        except (ValueError, ZeroDivisionError):
            raise UsageError("p must be a rational like 1/2") from None
        try:
            obj = random_graph(n, prob, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(write_instance(obj), args.output)
    return 0


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def bench_rows(count: int, seed: int, n_range, m_range, sizes, cap, mode="auto") -> list[dict]:
    rows = []
    for i, _, h in ensemble(count, seed, n_range, m_range, sizes, cap):
        counters: Counter = Counter()
        params = parameters(h)
        coloring, _ = color_hypergraph(h, mode, counters)
        rows.append({
            "instance_id": i, "n": h.n, "m": h.m,
            "delta": "" if params.delta is None else params.delta,
            "Delta": params.Delta, "k": params.k,
            "colors_used": coloring.used(), "rotations": counters["rotations"],
            "verified": "true" if verify_proper_hypergraph(h, coloring).ok else "false",
        })
    return rows


def cmd_bench(args) -> int:
    rows = bench_rows(args.count, args.seed, args.n, args.m, args.sizes,
                      args.cap or None, args.mode)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(buf.getvalue().encode("ascii"), args.output)
    if args.figure:
        from .plotting import bench_figure
        bench_figure(rows, args.figure)
    return 0 if all(r["verified"] == "true" for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypercolor",
                                     description="Proper hypergraph and dynamic graph colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a hypergraph file")
    p.add_argument("file")
    p.add_argument("--mode", choices=["auto", "k", "k1"], default="auto")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("dynamic", help="dynamic coloring of a graph file")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_dynamic)

    p = sub.add_parser("verify", help="check a coloring file")
    p.add_argument("instance")
    p.add_argument("coloring")
    p.add_argument("--kind", choices=["hyper", "graph", "dynamic"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("what", choices=["hyper", "graph"])
    p.add_argument("params", nargs="*", help="hyper: n= m= [lo= hi= cap=]; graph: n= [p=NUM/DEN]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a seeded ensemble and print CSV")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=_range, default=(6, 14))
    p.add_argument("--m", type=_range, default=(4, 20))
    p.add_argument("--sizes", type=_range, default=(3, 5))
    p.add_argument("--cap", type=int, default=6, help="degree cap, 0 for none")
    p.add_argument("--mode", choices=["auto", "k", "k1"], default="auto")
    p.add_argument("--figure", help="also write a PNG/PDF summary figure here")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (HypercolorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

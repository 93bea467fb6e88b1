"""Command-line driver: data generation, timing, verification and CSV output.

    simperturb delaunay --count 1000 --mode origin --verify
    simperturb circles --count 100 --degeneracy exact --out loops.txt
    simperturb selftest

Benchmark records are CSV rows with the columns in ``FIELDS``.  Only the
``seconds`` column varies between runs with the same flags.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import sys
import time
from dataclasses import dataclass, field

from . import prf
from .arcs import arc_boolean, format_arc_output
from .datagen import arc_quads, normal_points, origin_points
from .delaunay import check_triangulation, delaunay_triangulate, format_mesh
from .perturb import STATS, debug

FIELDS = ["algorithm", "input_class", "n", "seconds", "interval", "exact", "perturbed", "levels", "calls"]


@dataclass
class BenchRecord:
    algorithm: str
    input_class: str
    n: int
    seconds: float
    interval: int = 0
    exact: int = 0
    levels: dict = field(default_factory=dict)

    @property
    def perturbed(self) -> int:
        return sum(self.levels.values())

    @property
    def calls(self) -> int:
        return self.interval + self.exact + self.perturbed

    def row(self) -> dict:
        return {
            "algorithm": self.algorithm,
            "input_class": self.input_class,
            "n": self.n,
            "seconds": f"{self.seconds:.6f}",
            "interval": self.interval,
            "exact": self.exact,
            "perturbed": self.perturbed,
            "levels": ";".join(f"{k}:{v}" for k, v in sorted(self.levels.items())),
            "calls": self.calls,
        }


def sweep_counts(count: int, min_count: int | None) -> list[int]:
    """``count`` alone, or a 1-3-10 progression from ``min_count`` up to ``count``."""
    if min_count is None or min_count >= count:
        return [count]
    out = []
    base = min_count
    while base < count:
        for m in (1, 3):
            if base * m < count:
                out.append(base * m)
        base *= 10
    out.append(count)
    return out


def _timed(algorithm, input_class, n, fn):
    STATS.reset()
    t0 = time.perf_counter()
    result = fn()
    dt = time.perf_counter() - t0
    snap = STATS.snapshot()
    rec = BenchRecord(algorithm, input_class, n, dt, snap["interval"], snap["exact"], snap["levels"])
    return rec, result


def _write_csv(path, records):
    if path is None:
        return
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=FIELDS)
        w.writeheader()
        for r in records:
            w.writerow(r.row())


def cmd_delaunay(args) -> int:
    records = []
    for n in sweep_counts(args.count, args.min_count):
        if args.mode == "origin":
            pts = origin_points(n)
            cls = "degenerate"
        else:
            pts = normal_points(n, args.seed)
            cls = "random"
        rec, tri = _timed("delaunay", cls, n, lambda: delaunay_triangulate(pts))
        records.append(rec)
        text = format_mesh(tri)
        digest = hashlib.sha256(text.encode()).hexdigest()[:16]
        status = ""
        if args.verify:
            problems = check_triangulation(tri, empty_circle=n <= 500)
            if problems:
                print(f"n={n}: invalid triangulation: {problems[0]}", file=sys.stderr)
                return 1
            status = " verified"
        print(f"delaunay {cls} n={n} triangles={len(tri.triangles)} hull={len(tri.hull)} "
              f"sha={digest} time={rec.seconds:.3f}s{status}")
        if args.out and n == args.count:
            with open(args.out, "w") as fh:
                fh.write(text)
    _write_csv(args.csv, records)
    return 0


def check_loops(loops) -> list[str]:
    """Closure problems in output arc loops (consecutive arcs must share endpoints)."""
    problems = []
    for k, loop in enumerate(loops):
        if len(loop) == 1 and loop[0].start is None:
            continue
        for i, arc in enumerate(loop):
            nxt = loop[(i + 1) % len(loop)]
            if arc.start is None or arc.end != nxt.start:
                problems.append(f"loop {k} is not closed at arc {i}")
    return problems


def cmd_circles(args) -> int:
    records = []
    cls = {"random": "random", "near": "near-degenerate", "exact": "degenerate"}[args.degeneracy]
    for n in sweep_counts(args.count, args.min_count):
        quads = arc_quads(n, args.degeneracy, args.seed)
        rec, loops = _timed("circles", cls, n, lambda: arc_boolean(quads, [], "union"))
        records.append(rec)
        text = format_arc_output(loops)
        digest = hashlib.sha256(text.encode()).hexdigest()[:16]
        problems = check_loops(loops)
        if problems:
            print(f"n={n}: {problems[0]}", file=sys.stderr)
            return 1
        print(f"circles {cls} n={n} loops={len(loops)} arcs={sum(map(len, loops))} "
              f"sha={digest} time={rec.seconds:.3f}s")
        if args.out and n == args.count:
            with open(args.out, "w") as fh:
                fh.write(text)
    _write_csv(args.csv, records)
    return 0


def cmd_selftest(args) -> int:
    from . import selftest

    return 0 if selftest.run(sys.stdout) else 1


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simperturb", description=__doc__.split("\n")[0])
    p.add_argument("--prf-seed", help="perturbation seed (hex or decimal); default is built in")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--count", type=_positive, default=1000)
        sp.add_argument("--seed", type=int, default=0, help="input generator seed")
        sp.add_argument("--out", help="write the result of the largest run here")
        sp.add_argument("--csv", help="write benchmark records here")
        sp.add_argument("--min-count", type=_positive, help="sweep from this count up to --count")
        sp.add_argument("--verify", action="store_true", help="check output invariants")
        sp.add_argument("--both-paths", action="store_true",
                        help="evaluate filtered and exact tiers and compare them")

    d = sub.add_parser("delaunay", help="triangulate generated points")
    d.add_argument("--mode", choices=["random-normal", "origin"], default="random-normal")
    common(d)
    d.set_defaults(func=cmd_delaunay)

    c = sub.add_parser("circles", help="union of generated arc 4-gons")
    c.add_argument("--degeneracy", choices=["random", "near", "exact"], default="random")
    common(c)
    c.set_defaults(func=cmd_circles)

    s = sub.add_parser("selftest", help="run reduced property checks")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.prf_seed is not None:
        prf.set_seed(int(args.prf_seed, 0))
    try:
        if getattr(args, "both_paths", False):
            with debug(both_paths=True):
                return args.func(args)
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

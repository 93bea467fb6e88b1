"""The ten acceptance criteria, each at its stated size and tolerance.

Every test records one PASS/FAIL line, printed in the terminal summary.
Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import math
import pickle
import random
import subprocess
import sys
import time
from pathlib import Path

import mpmath
import numpy as np
import pytest

from helpers import (PREDICATES, SIGN_PREDICATES, degenerate_inputs, distinct_indices, oracle_sign,
                     query_set)
from simperturb import circles as circles_mod
from simperturb import prf
from simperturb.arcs import arc_boolean, arc_loops_area, arc_winding, arcs_of_input
from simperturb.booleans import polygon_boolean, winding_number
from simperturb.circles import Circle, circle_intersection_point, circles_intersect, intersection_below
from simperturb.datagen import arc_quads, normal_points, origin_points, random_triangles
from simperturb.delaunay import check_triangulation, delaunay_triangulate
from simperturb.interpolation import InterpolationError, interpolate_multivariate, lattice
from simperturb.numeric import Predicate
from simperturb.perturb import (STATS, IdenticallyZeroError, check_nonzero_polynomial, perturbed_sign,
                                resolve)
from simperturb.polys import below_a, below_em, below_ep, below_f6, below_f8, circle_beta2

TESTS = Path(__file__).resolve().parent


def _slope(ns, ts):
    return float(np.polyfit(np.log(ns), np.log(ts), 1)[0])


# 1. Totality and determinism.

def test_totality_and_determinism(tmp_path, report):
    t0 = time.perf_counter()
    per_class = 100_000 // 3 + 1
    queries = {}
    for name in SIGN_PREDICATES:
        qs = query_set(name, per_class, seed=1)[: 100_000]
        queries[name] = [(args, idx) for _, args, idx in qs]
    infile = tmp_path / "queries.pkl"
    with open(infile, "wb") as fh:
        pickle.dump(queries, fh)
    results = []
    for k, shuffle in enumerate((-1, 12345)):
        out = tmp_path / f"signs{k}.pkl"
        code = f"import sys; sys.path.insert(0, {str(TESTS)!r}); import helpers; " \
               f"helpers.signs_main({str(infile)!r}, {str(out)!r}, {shuffle})"
        subprocess.run([sys.executable, "-c", code], check=True)
        with open(out, "rb") as fh:
            results.append(pickle.load(fh))
    elapsed = time.perf_counter() - t0
    zeros = sum(v.count(b"0") for v in results[0].values())
    same = results[0] == results[1]
    total = sum(len(v) for v in queries.values())
    ok = zeros == 0 and same and elapsed < 300 and all(len(v) == 100_000 for v in queries.values())
    report(1, ok, f"{total} queries over {len(queries)} predicates, zero signs {zeros}, "
                  f"runs identical {same}, {elapsed:.0f}s (< 300s)")
    assert ok


# 2. Level-1 agreement with the symbolic expansion.

def test_level_one_oracle(report):
    bad = 0
    checked = 0
    deeper = 0
    for name in SIGN_PREDICATES:
        f = PREDICATES[name]
        rng = random.Random(f"c2:{name}")
        for args in degenerate_inputs(name, 1000, rng):
            idx = distinct_indices(f.arity, rng)
            want, level = oracle_sign(f, args, idx, max_level=1)
            if level is None:
                want, level = oracle_sign(f, args, idx, max_level=3)
                deeper += 1
            got, tier = resolve(f, args, idx)
            checked += 1
            if got != want or tier != level:
                bad += 1
    ok = bad == 0 and checked == 1000 * len(SIGN_PREDICATES)
    report(2, ok, f"{checked} degenerate queries, {bad} disagreements ({deeper} needed level >= 2)")
    assert ok


# 3. Forced perturbation levels and identically zero polynomials.

def _forced(indices):
    u = [prf.coefficient(1, i) for i in indices]
    v = [prf.coefficient(2, i) for i in indices]
    lvl2 = Predicate("forced2", lambda a, b: u[1] * a - u[0] * b, 2, 1)
    lvl2sq = Predicate("forced2sq", lambda a, b: (u[1] * a - u[0] * b) ** 2, 2, 2)

    def det3(a, b, c):
        return (a * (u[1] * v[2] - u[2] * v[1]) - b * (u[0] * v[2] - u[2] * v[0])
                + c * (u[0] * v[1] - u[1] * v[0]))

    lvl3 = Predicate("forced3", det3, 3, 1)
    lvl3sq = Predicate("forced3sq", lambda a, b, c: det3(a, b, c) * (a + b + c + 7), 3, 2)
    return u, lvl2, lvl2sq, lvl3, lvl3sq


def test_forced_levels(report):
    rng = random.Random(3)
    fails = []
    for _ in range(50):
        idx = distinct_indices(3, rng)
        u, lvl2, lvl2sq, lvl3, lvl3sq = _forced(idx)
        a = rng.randint(-5, 5)
        # f(x) = 0 on the level-1 direction itself, and at the origin.
        for f, args, level in ((lvl2, [a * u[0], a * u[1]], 2), (lvl2sq, [0, 0], 2),
                               (lvl3, [a * u[0], a * u[1], a * u[2]], 3), (lvl3sq, [0, 0, 0], 3)):
            ix = idx[: f.arity]
            want, want_level = oracle_sign(f, args, ix, max_level=3)
            got, tier = resolve(f, args, ix)
            if tier != level or want_level != level or got != want:
                fails.append((f.name, tier, want_level))
    zero = Predicate("zero", lambda a, b: a * b - b * a, 2, 2)
    raised = 0
    for f, args, idx in ((zero, [3, 4], [0, 1]),
                         (PREDICATES["orient2d"], [0, 0, 0, 0, 5, 5], [0, 1, 0, 1, 2, 3]),
                         (PREDICATES["incircle"], [1, 1, 2, 2, 1, 1, 7, 8], [0, 1, 2, 3, 0, 1, 4, 5])):
        try:
            perturbed_sign(f, args, idx)
        except IdenticallyZeroError:
            raised += 1
    nonzero_ok = check_nonzero_polynomial(PREDICATES["below_f8"]) and not check_nonzero_polynomial(zero)
    ok = not fails and raised == 3 and nonzero_ok
    report(3, ok, f"200 forced queries, {len(fails)} wrong levels; identically zero raised {raised}/3")
    assert ok


# 4. Interpolation round trips.

def _eval_poly(terms, point):
    total = 0
    for e, c in terms:
        t = c
        for x, p in zip(point, e):
            t *= x**p
        total += t
    return total


def test_interpolation_round_trip(report):
    rng = random.Random(4)
    bad = 0
    errors = 0
    for _ in range(1000):
        k = rng.randint(1, 3)
        d = rng.randint(0, 8)
        lat = lattice(k, d)
        coeffs = [rng.randint(-10**6, 10**6) for _ in lat.tuples]
        terms = list(zip(lat.tuples, coeffs))
        values = [_eval_poly(terms, e) for e in lat.tuples]
        try:
            if interpolate_multivariate(values, k, d) != coeffs:
                bad += 1
        except InterpolationError:
            errors += 1
    ok = bad == 0 and errors == 0
    report(4, ok, f"1000 polynomials, {bad} mismatches, {errors} inexact divisions")
    assert ok


# 5. Factorization identities for the three-circle comparison.

def test_factorization_identities(report):
    rng = random.Random(5)
    fails = [0, 0, 0]
    lim = 1 << 30
    for _ in range(1000):
        x0, y0, x1, y1, x2, y2 = (rng.randint(-lim, lim) for _ in range(6))
        r0, r1, r2 = (rng.randint(1, lim) for _ in range(3))
        args = (x0, y0, r0, x1, y1, r1, x2, y2, r2)
        ax, ay, bx, by = x1 - x0, y1 - y0, x2 - x0, y2 - y0
        c01, c02 = ax * ax + ay * ay, bx * bx + by * by
        a = below_a(*args)
        b1 = ax * ax * c02 * c02 * circle_beta2(x0, y0, r0, x1, y1, r1)
        b2 = bx * bx * c01 * c01 * circle_beta2(x0, y0, r0, x2, y2, r2)
        fails[0] += a * a + b1 - b2 != c02 * below_f8(*args)
        fails[1] += a * a - b1 - b2 != c01 * c02 * below_f6(*args)
        m = a * a - b1 - b2
        fails[2] += m * m - 4 * b1 * b2 != c01**2 * c02**2 * below_ep(*args) * below_em(*args)
    ok = fails == [0, 0, 0]
    report(5, ok, f"1000 triples, failures per identity {fails}")
    assert ok


# 6. Circle predicates against a 300-bit oracle.

def _mp_point(c0, c1, left):
    x0, y0, r0 = map(mpmath.mpf, c0[:3])
    x1, y1, r1 = map(mpmath.mpf, c1[:3])
    dx, dy = x1 - x0, y1 - y0
    d2 = dx * dx + dy * dy
    a = d2 + r0 * r0 - r1 * r1
    b = mpmath.sqrt(4 * r0 * r0 * d2 - a * a) * (1 if left else -1)
    return x0 + (a * dx - b * dy) / (2 * d2), y0 + (a * dy + b * dx) / (2 * d2)


def test_circle_oracle(report):
    mpmath.mp.prec = 300
    rng = random.Random(6)
    scale = 10**15
    guard = mpmath.mpf(10) ** -20 * scale
    below_bad = point_bad = skipped = n = 0
    circles_mod.clear_cache()

    def rc(i):
        return Circle(rng.randint(-scale, scale), rng.randint(-scale, scale), rng.randint(scale // 2, 2 * scale), i)

    while n < 10_000:
        c0, c1, c2 = rc(0), rc(1), rc(2)
        if not (circles_intersect(c0, c1) and circles_intersect(c0, c2)):
            continue
        circles_mod.clear_cache()
        n += 1
        l1, l2 = rng.random() < 0.5, rng.random() < 0.5
        p1, p2 = _mp_point(c0, c1, l1), _mp_point(c0, c2, l2)
        q = circle_intersection_point(c0, c1, l1)
        if abs(q[0] - p1[0]) > 0.5 or abs(q[1] - p1[1]) > 0.5:
            point_bad += 1
        if abs(p1[1] - p2[1]) < guard:
            skipped += 1
            continue
        if intersection_below(c0, c1, c2, l1, l2) != (p1[1] < p2[1]):
            below_bad += 1
    ok = below_bad == 0 and point_bad == 0
    report(6, ok, f"{n} triples: {below_bad} ordering and {point_bad} rounding violations, "
                  f"{skipped} inside the separation guard")
    assert ok


# 7. Delaunay correctness.

def _triangle_set(tri):
    out = set()
    for a, b, c in tri.triangles:
        k = min(range(3), key=lambda i: (a, b, c)[i])
        t = (a, b, c)[k:] + (a, b, c)[:k]
        out.add(t)
    return out


def test_delaunay_correctness(report):
    rng = random.Random(7)
    problems = 0
    for k in range(50):
        n = rng.randint(3, 200)
        span = rng.choice((3, 20, 1 << 40))
        pts = [(rng.randint(-span, span), rng.randint(-span, span)) for _ in range(n)]
        problems += len(check_triangulation(delaunay_triangulate(pts), empty_circle=True))
    origin = delaunay_triangulate(origin_points(1000))
    origin_problems = len(check_triangulation(origin, empty_circle=True))
    square = [(10**6, 0), (0, 10**6), (-10**6, 0), (0, -10**6)]
    runs = {frozenset(_triangle_set(delaunay_triangulate(square, order=list(o))))
            for o in ((0, 1, 2, 3), (3, 2, 1, 0), (1, 3, 0, 2), (2, 0, 3, 1))}
    cocircular_ok = len(runs) == 1 and len(next(iter(runs))) == 2
    ok = problems == 0 and origin_problems == 0 and cocircular_ok
    report(7, ok, f"50 random instances: {problems} violations; origin n=1000: {origin_problems}; "
                  f"cocircular square deterministic {cocircular_ok}")
    assert ok


# 8. Delaunay scaling.

def test_delaunay_scaling(report):
    t_start = time.perf_counter()
    delaunay_triangulate(normal_points(2000, seed=99))
    delaunay_triangulate(origin_points(2000))
    ns = [10_000, 30_000, 100_000, 300_000]
    rand_t, deg_t = [], []
    for n in ns:
        pts = normal_points(n, seed=n)
        t0 = time.perf_counter()
        delaunay_triangulate(pts)
        rand_t.append(time.perf_counter() - t0)
        pts = origin_points(n)
        t0 = time.perf_counter()
        delaunay_triangulate(pts)
        deg_t.append(time.perf_counter() - t0)
    s_rand, s_deg = _slope(ns, rand_t), _slope(ns, deg_t)
    ratios = [d / r for d, r in zip(deg_t, rand_t)]
    spread = max(ratios) / min(ratios)
    elapsed = time.perf_counter() - t_start
    ok = s_rand <= 1.3 and s_deg <= 1.3 and spread < 2 and elapsed < 600
    times = ", ".join(f"{n}: {r:.1f}/{d:.1f}s" for n, r, d in zip(ns, rand_t, deg_t))
    report(8, ok, f"slopes random {s_rand:.3f}, degenerate {s_deg:.3f} (<= 1.3); "
                  f"ratio {min(ratios):.1f}-{max(ratios):.1f}x, spread {spread:.2f} (< 2); "
                  f"{elapsed:.0f}s; [{times}]")
    assert ok


# 9. Booleans.

def _linf_to_boundary(pt, loop):
    best = math.inf
    x, y = pt
    for k in range(len(loop)):
        (x0, y0), (x1, y1) = loop[k], loop[(k + 1) % len(loop)]
        # L-infinity distance from pt to the segment, by ternary search on t
        # (convex in t).
        lo, hi = 0.0, 1.0
        for _ in range(100):
            m1, m2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
            f1 = max(abs(x0 + m1 * (x1 - x0) - x), abs(y0 + m1 * (y1 - y0) - y))
            f2 = max(abs(x0 + m2 * (x1 - x0) - x), abs(y0 + m2 * (y1 - y0) - y))
            if f1 < f2:
                hi = m2
            else:
                lo = m1
        t = (lo + hi) / 2
        best = min(best, max(abs(x0 + t * (x1 - x0) - x), abs(y0 + t * (y1 - y0) - y)))
    return best


def _self_union_close(poly):
    out = polygon_boolean([poly], [poly], "union")
    verts = [p for loop in out for p in loop]
    near_boundary = all(_linf_to_boundary(p, poly) <= 0.5 for p in verts)
    corners = all(any(max(abs(p[0] - c[0]), abs(p[1] - c[1])) <= 0.5 for p in verts) for c in poly)
    return len(out) == 1 and near_boundary and corners


def _near_segment(x, y, p, q, dist):
    dx, dy = q[0] - p[0], q[1] - p[1]
    n = dx * dx + dy * dy
    t = 0.0 if n == 0 else min(1.0, max(0.0, ((x - p[0]) * dx + (y - p[1]) * dy) / n))
    ex, ey = p[0] + t * dx - x, p[1] + t * dy - y
    return ex * ex + ey * ey < dist * dist


def _edge_grid(loops, cell):
    grid = {}
    for loop in loops:
        for k in range(len(loop)):
            p, q = loop[k], loop[(k + 1) % len(loop)]
            for gx in range(int(min(p[0], q[0]) // cell) - 1, int(max(p[0], q[0]) // cell) + 2):
                for gy in range(int(min(p[1], q[1]) // cell) - 1, int(max(p[1], q[1]) // cell) + 2):
                    grid.setdefault((gx, gy), []).append((p, q))
    return grid


def _arc_mc(loops_in, loops_out, samples, seed):
    cs = [a.circle for loop in loops_in for a in loop]
    x0, x1 = min(c.x - c.r for c in cs), max(c.x + c.r for c in cs)
    y0, y1 = min(c.y - c.r for c in cs), max(c.y + c.r for c in cs)
    rng = np.random.default_rng(seed)
    xs, ys = rng.uniform(x0, x1, samples), rng.uniform(y0, y1, samples)
    box = (x1 - x0) * (y1 - y0)
    want = arc_winding(loops_in, xs, ys) != 0
    got = arc_winding(loops_out, xs, ys) != 0
    return box * want.mean(), box * got.mean(), box, int(np.count_nonzero(want != got))


def test_booleans(report):
    # Self-union of convex polygons.
    rng = random.Random(9)
    square = [(0, 0), (10**6, 0), (10**6, 10**6), (0, 10**6)]
    hexagon = [(0, 0), (700_001, -300_003), (1_400_000, 100_007), (1_300_011, 900_000),
               (400_013, 1_200_001), (-200_003, 600_011)]
    self_union = _self_union_close(square) and _self_union_close(hexagon)

    # 100 random triangles against ray casting.
    tris = random_triangles(100, seed=9)
    a, b = tris[:50], tris[50:]
    out = polygon_boolean(a, b, "union")
    grid = _edge_grid(out, 10_000)
    poly_bad = poly_n = 0
    while poly_n < 10_000:
        x, y = rng.uniform(0, 10**6), rng.uniform(0, 10**6)
        edges = grid.get((int(x // 10_000), int(y // 10_000)), [])
        if any(_near_segment(x, y, p, q, 2.0) for p, q in edges):
            continue
        poly_n += 1
        want = winding_number(a, x, y) != 0 or winding_number(b, x, y) != 0
        poly_bad += (winding_number(out, x, y) != 0) != want

    # Union of 50 random arc 4-gons against a Monte-Carlo oracle.
    quads = arc_quads(50, "random", seed=9)
    arc_out = arc_boolean(quads[:25], quads[25:], "union")
    ins = arcs_of_input(quads)
    mc_in, mc_out, box, mismatched = _arc_mc(ins, arc_out, 10**6, seed=9)
    rel = abs(mc_out - mc_in) / mc_in
    exact_area = arc_loops_area(arc_out)
    p = mc_in / box
    sigma = box * math.sqrt(p * (1 - p) / 10**6)
    area_ok = rel <= 1e-6 and abs(exact_area - mc_in) <= 5 * sigma

    # Timing slopes over counts 10..300.
    counts = [10, 30, 100, 300]
    slopes = {}
    for cls in ("exact", "random"):
        arc_boolean(arc_quads(5, cls, seed=1), [], "union")
        ts = []
        for c in counts:
            qs = arc_quads(c, cls, seed=c)
            t0 = time.perf_counter()
            arc_boolean(qs[: c // 2], qs[c // 2:], "union")
            ts.append(time.perf_counter() - t0)
        slopes[cls] = _slope(counts, ts)
    slope_ok = slopes["exact"] <= 2.4 and slopes["random"] <= 2.1

    ok = self_union and poly_bad == 0 and area_ok and slope_ok
    report(9, ok, f"self-union {self_union}; polygon sampling {poly_bad}/{poly_n} wrong; "
                  f"arc MC relative error {rel:.1e} ({mismatched} samples differ), "
                  f"exact area within {abs(exact_area - mc_in) / sigma:.1f} sigma; "
                  f"slopes exact {slopes['exact']:.2f} (<= 2.4), random {slopes['random']:.2f} (<= 2.1)")
    assert ok


# 10. Cascade accounting.

def test_cascade_accounting(report):
    STATS.reset()
    delaunay_triangulate(normal_points(10_000, seed=10))
    arc_boolean(arc_quads(100, "random", seed=10), [], "union")
    random_frac = STATS.interval / STATS.calls

    STATS.reset()
    delaunay_triangulate(origin_points(30_000))
    q = arc_quads(100, "exact", seed=10)
    arc_boolean(q[:50], q[50:], "union")
    degenerate = STATS.perturbed
    deep = sum(v for k, v in STATS.levels.items() if k >= 2)
    rate = deep / degenerate * 1e5
    ok = random_frac >= 0.99 and degenerate >= 10**5 and rate <= 5
    report(10, ok, f"random input {100 * random_frac:.2f}% interval (>= 99%); "
                   f"{deep} level>=2 events in {degenerate} degenerate calls = {rate:.2f} per 1e5 (<= 5)")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))

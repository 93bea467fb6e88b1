"""Reduced-size property checks behind ``simperturb selftest``.

Every check is deterministic and prints no timings, so two runs produce
byte-identical reports.  The golden check pins the triangulation of a
degenerate input under the default perturbation seed; the rest hold for
any seed.
"""

from __future__ import annotations

import hashlib
import random

import numpy as np

from . import prf
from .arcs import arc_boolean, arc_winding, arcs_of_input
from .booleans import polygon_boolean, winding_number
from .datagen import arc_quads, origin_points
from .delaunay import check_triangulation, delaunay_triangulate
from .interpolation import coefficient_table, evaluate_multivariate, interpolate_multivariate, lattice
from .perturb import IdenticallyZeroError, perturbed_sign
from .polys import PREDICATES, below_a, below_em, below_ep, below_f6, below_f8, circle_beta2

# sha256 of the triangles of 12 copies of the origin under DEFAULT_SEED.
GOLDEN_ORIGIN_12 = "a51e9028fb3b91964710c5e3c91661ade41cd2deae72b6096d106de2fe6127f8"


def _prf_vectors():
    out = prf.threefry4x32((0, 0, 0, 0), (0, 0, 0, 0))
    return tuple(out) == (0x9C6CA96A, 0xE17EAE66, 0xFC10ECD4, 0x5256A7D8)


def _interpolation():
    rng = random.Random(1)
    for _ in range(60):
        k = rng.randint(1, 3)
        d = rng.randint(0, 6)
        lat = lattice(k, d)
        coeffs = [rng.randint(-10**6, 10**6) for _ in lat.tuples]
        table = coefficient_table(coeffs, k, d)
        vals = [evaluate_multivariate(table, e) for e in lat.tuples]
        if interpolate_multivariate(vals, k, d) != coeffs:
            return False
    return True


def _identities():
    rng = random.Random(2)
    for _ in range(100):
        x0, y0, x1, y1, x2, y2 = (rng.randint(-1000, 1000) for _ in range(6))
        r0, r1, r2 = (rng.randint(1, 1000) for _ in range(3))
        args = (x0, y0, r0, x1, y1, r1, x2, y2, r2)
        ax, ay, bx, by = x1 - x0, y1 - y0, x2 - x0, y2 - y0
        a2, b2 = ax * ax + ay * ay, bx * bx + by * by
        A = below_a(*args)
        c1 = circle_beta2(x0, y0, r0, x1, y1, r1)
        c2 = circle_beta2(x0, y0, r0, x2, y2, r2)
        bb1 = ax * ax * b2 * b2 * c1
        bb2 = bx * bx * a2 * a2 * c2
        if A * A + bb1 - bb2 != b2 * below_f8(*args):
            return False
        if A * A - bb1 - bb2 != a2 * b2 * below_f6(*args):
            return False
        m = A * A - bb1 - bb2
        if m * m - 4 * bb1 * bb2 != a2 * a2 * b2 * b2 * below_ep(*args) * below_em(*args):
            return False
    return True


def _identically_zero():
    f = PREDICATES["orient2d"]
    try:
        perturbed_sign(f, [0, 0, 0, 0, 5, 5], [0, 1, 0, 1, 2, 3])
    except IdenticallyZeroError:
        return True
    return False


def _delaunay_random():
    rng = random.Random(3)
    pts = [(rng.randint(-20, 20), rng.randint(-20, 20)) for _ in range(120)]
    return not check_triangulation(delaunay_triangulate(pts), empty_circle=True)


def _delaunay_origin():
    return not check_triangulation(delaunay_triangulate(origin_points(300)))


def _golden():
    tri = delaunay_triangulate(origin_points(12))
    digest = hashlib.sha256(repr(tri.triangles).encode()).hexdigest()
    return digest == GOLDEN_ORIGIN_12


def _near_segment(x, y, p, q, dist):
    dx, dy = q[0] - p[0], q[1] - p[1]
    n = dx * dx + dy * dy
    t = 0.0 if n == 0 else min(1.0, max(0.0, ((x - p[0]) * dx + (y - p[1]) * dy) / n))
    ex, ey = p[0] + t * dx - x, p[1] + t * dy - y
    return ex * ex + ey * ey < dist * dist


def _polygons():
    rng = random.Random(4)
    tris = [[(rng.randint(0, 6) * 50, rng.randint(0, 6) * 50) for _ in range(3)] for _ in range(16)]
    a, b = tris[:8], tris[8:]
    out = polygon_boolean(a, b, "union")
    edges = [(loop[k], loop[(k + 1) % len(loop)]) for loop in out for k in range(len(loop))]
    for _ in range(400):
        x, y = rng.uniform(0, 300), rng.uniform(0, 300)
        if any(_near_segment(x, y, p, q, 2.0) for p, q in edges):
            continue
        want = winding_number(a, x, y) != 0 or winding_number(b, x, y) != 0
        if (winding_number(out, x, y) != 0) != want:
            return False
    return True


def _arcs():
    quads = arc_quads(12, "exact", seed=5)
    out = arc_boolean(quads[:6], quads[6:], "union")
    ins = arcs_of_input(quads)
    rng = np.random.default_rng(6)
    cs = [a.circle for loop in ins for a in loop]
    xs = rng.uniform(min(c.x - c.r for c in cs), max(c.x + c.r for c in cs), 20000)
    ys = rng.uniform(min(c.y - c.r for c in cs), max(c.y + c.r for c in cs), 20000)
    want = arc_winding(ins, xs, ys) != 0
    got = arc_winding(out, xs, ys)
    return bool(np.all((got != 0) == want) and np.all((got == 0) | (got == 1)))


CHECKS = [
    ("prf known-answer vectors", _prf_vectors),
    ("interpolation round trip", _interpolation),
    ("circle factorization identities", _identities),
    ("identically zero detection", _identically_zero),
    ("delaunay brute-force check", _delaunay_random),
    ("delaunay all at origin", _delaunay_origin),
    ("golden degenerate triangulation", _golden),
    ("polygon union vs ray casting", _polygons),
    ("arc union vs sampling", _arcs),
]


def run(out) -> bool:
    """Print a pass/fail table to ``out``; True when everything passed."""
    ok = True
    width = max(len(name) for name, _ in CHECKS)
    for name, check in CHECKS:
        try:
            passed = bool(check())
            note = ""
        except Exception as exc:  # report, don't crash the table
            passed = False
            note = f"  ({type(exc).__name__}: {exc})"
        ok &= passed
        print(f"{name:<{width}}  {'PASS' if passed else 'FAIL'}{note}", file=out)
    print(f"{'overall':<{width}}  {'PASS' if ok else 'FAIL'}", file=out)
    return ok

"""Benchmark and test inputs.

All generators take a ``seed`` for numpy's default generator, which is
independent of the perturbation stream.

Arc 4-gons are squares-ish quads whose edges bulge outward along circles.
The ``exact`` class tiles copies of one template on a coarse grid: every
circle has an integer center and radius (3-4-5 triangles) and passes
exactly through its integer corners, so neighbouring copies share corners,
coincide, or meet tangentially.  ``near`` takes the same layout and moves
every center coordinate and radius by -1 or +1.  ``random`` draws
convex quads at random positions and sizes.
"""

from __future__ import annotations

import math

import numpy as np

from .numeric import quantize

#: Template scale for the exact and near arc classes: the square side is 8*M.
ARC_UNIT = 1 << 38


def normal_points(n: int, seed: int = 0) -> list[tuple[int, int]]:
    """n standard normal points, quantized to the 53-bit grid."""
    rng = np.random.default_rng(seed)
    q = quantize(rng.normal(size=(n, 2)))
    return [(int(x), int(y)) for x, y in q.points]


def origin_points(n: int) -> list[tuple[int, int]]:
    return [(0, 0)] * n


def random_triangles(n: int, seed: int = 0, extent: int = 10**6, size: int = 2 * 10**5):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        cx, cy = rng.integers(0, extent, size=2)
        d = rng.integers(-size, size + 1, size=(3, 2))
        out.append([(int(cx + dx), int(cy + dy)) for dx, dy in d])
    return out


def _branch(c0, c1, p) -> bool:
    """Is p left of the line from c0's center to c1's?"""
    ux, uy = c1[0] - c0[0], c1[1] - c0[1]
    vx, vy = p[0] - c0[0], p[1] - c0[1]
    return ux * vy - uy * vx > 0


def _quad_arcs(corners, centers, radii):
    """Arc records for a ccw quad whose edge k lies on circle k."""
    recs = []
    for k in range(4):
        c = (centers[k][0], centers[k][1])
        nxt = centers[(k + 1) % 4]
        recs.append((int(c[0]), int(c[1]), int(radii[k]), True, _branch(c, nxt, corners[(k + 1) % 4])))
    return recs


def _template(m: int):
    s = 8 * m
    corners = [(0, 0), (s, 0), (s, s), (0, s)]
    # Centers sit 3m inside each edge's midpoint: radius 5m exactly.
    centers = [(4 * m, 3 * m), (5 * m, 4 * m), (4 * m, 5 * m), (3 * m, 4 * m)]
    return corners, centers, [5 * m] * 4


def arc_quads(count: int, degeneracy: str = "random", seed: int = 0, unit: int = ARC_UNIT):
    """``count`` arc 4-gons as loops of ``(x, y, r, ccw, left)`` records."""
    rng = np.random.default_rng(seed)
    if degeneracy not in ("random", "near", "exact"):
        raise ValueError(f"unknown degeneracy class {degeneracy!r}")
    s = 8 * unit
    grid = max(1, math.ceil(math.sqrt(count / 2)))
    loops = []
    if degeneracy == "random":
        for _ in range(count):
            cx, cy = rng.uniform(0, grid * s, size=2)
            size = rng.uniform(0.3, 0.7) * s
            ang = np.sort(rng.uniform(0, 2 * math.pi, size=4))
            # Keep the quad convex and not too thin.
            ang = ang[0] + np.array([0, 0.5, 1.0, 1.5]) * math.pi + rng.uniform(-0.3, 0.3, size=4)
            corners = [(cx + size * math.cos(t), cy + size * math.sin(t)) for t in ang]
            centers, radii = [], []
            for k in range(4):
                (x0, y0), (x1, y1) = corners[k], corners[(k + 1) % 4]
                mx, my = (x0 + x1) / 2, (y0 + y1) / 2
                half = math.hypot(x1 - x0, y1 - y0) / 2
                nx, ny = -(y1 - y0) / (2 * half), (x1 - x0) / (2 * half)
                h = rng.uniform(0.5, 1.5) * half
                c = (round(mx + nx * h), round(my + ny * h))
                centers.append(c)
                radii.append(round(math.hypot(x0 - c[0], y0 - c[1])))
            loops.append(_quad_arcs(corners, centers, radii))
        return loops
    corners, centers, radii = _template(unit)
    for _ in range(count):
        i, j = rng.integers(0, grid, size=2)
        ox, oy = int(i) * s, int(j) * s
        cs = [(x + ox, y + oy) for x, y in centers]
        rs = list(radii)
        if degeneracy == "near":
            jit = 2 * rng.integers(0, 2, size=(4, 3)) - 1
            cs = [(x + int(a), y + int(b)) for (x, y), (a, b, _) in zip(cs, jit)]
            rs = [r + int(c) for r, (_, _, c) in zip(rs, jit)]
        loops.append(_quad_arcs([(x + ox, y + oy) for x, y in corners], cs, rs))
    return loops

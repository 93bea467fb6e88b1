"""Incremental Delaunay triangulation on perturbed predicates.

Bowyer-Watson insertion with ghost triangles for the convex hull: the
triangle ``(a, b, GHOST)`` sits outside hull edge ``a -> b`` and conflicts
with every point strictly left of that edge.  Points are inserted in biased
randomized rounds, each round sorted along a Hilbert curve, and located by
a visibility walk from the most recent triangle.

Because every incircle and orientation test is perturbed, duplicates and
cocircular or collinear sets need no special cases: the result is the
Delaunay triangulation of the perturbed points.  Point ``i`` is perturbed
under coordinate indices ``2i`` and ``2i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import prf
from .perturb import DEBUG, STATS, perturbed_sign, sign_after_filter
from .polys import PREDICATES

GHOST = -1

_ORIENT = PREDICATES["orient2d"]
_INCIRCLE = PREDICATES["incircle"]


@dataclass
class Triangulation:
    """Finite triangles (counterclockwise vertex triples) plus hull bookkeeping.

    ``neighbors[t][i]`` is the triangle across the edge opposite vertex
    ``i`` of triangle ``t``, or -1 across a hull edge.  ``hull`` lists the
    hull edges ``(a, b)`` with the outside on their left, i.e. the ghost
    triangles.
    """

    points: list[tuple[int, int]]
    triangles: list[tuple[int, int, int]] = field(default_factory=list)
    neighbors: list[tuple[int, int, int]] = field(default_factory=list)
    hull: list[tuple[int, int]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.points)


def hilbert_index(x: np.ndarray, y: np.ndarray, bits: int = 16) -> np.ndarray:
    """Hilbert curve index of integer grid coordinates in [0, 2**bits)."""
    x = x.astype(np.int64).copy()
    y = y.astype(np.int64).copy()
    d = np.zeros(x.shape, dtype=np.int64)
    s = 1 << (bits - 1)
    while s > 0:
        rx = (x & s) > 0
        ry = (y & s) > 0
        d += s * s * ((3 * rx) ^ ry)
        # Rotate the quadrant so the curve stays continuous.
        flip = ~ry
        swap_x = np.where(flip & rx, s - 1 - x, x)
        swap_y = np.where(flip & rx, s - 1 - y, y)
        x = np.where(flip, swap_y, swap_x)
        y = np.where(flip, swap_x, swap_y)
        x &= s - 1
        y &= s - 1
        s >>= 1
    return d


def _grid(v: np.ndarray, lo: float, hi: float, bits: int) -> np.ndarray:
    span = hi - lo
    if span <= 0:
        return np.zeros(v.shape, dtype=np.int64)
    g = np.floor((v - lo) / span * ((1 << bits) - 1))
    return np.clip(g, 0, (1 << bits) - 1).astype(np.int64)


def insertion_order(points, seed: int = 0x5EED) -> list[int]:
    """Biased randomized insertion order: geometric rounds, each Hilbert-sorted.

    Ties in the Hilbert key (duplicates, or everything at one point) are
    broken by the Hilbert key of each point's first-level perturbation
    direction, which is where the perturbed points actually differ.
    """
    n = len(points)
    if n == 0:
        return []
    pts = np.asarray(points, dtype=np.float64).reshape(n, 2)
    bits = 16
    hx = _grid(pts[:, 0], pts[:, 0].min(), pts[:, 0].max(), bits)
    hy = _grid(pts[:, 1], pts[:, 1].min(), pts[:, 1].max(), bits)
    key = hilbert_index(hx, hy, bits)
    ids = np.arange(n, dtype=np.uint64)
    yx = prf.rand_coefficients(1, 2 * ids).astype(np.int64) >> (32 - bits)
    yy = prf.rand_coefficients(1, 2 * ids + 1).astype(np.int64) >> (32 - bits)
    tie = hilbert_index(yx, yy, bits)
    rng = np.random.default_rng(seed)
    rounds = rng.geometric(0.5, size=n)
    # Largest round number first: those are the small early rounds.
    order = np.lexsort((tie, key, -rounds))
    return order.tolist()


class _Builder:
    def __init__(self, points):
        self.xs = [int(p[0]) for p in points]
        self.ys = [int(p[1]) for p in points]
        self.xf = [float(v) for v in self.xs]
        self.yf = [float(v) for v in self.ys]
        for v, f in zip(self.xs + self.ys, self.xf + self.yf):
            if v != f:
                raise ValueError("coordinates must be quantized integers (|v| <= 2**53)")
        ids = np.arange(len(self.xs), dtype=np.uint64)
        self.y1x = [int(v) for v in prf.rand_coefficients(1, 2 * ids)] if len(ids) else []
        self.y1y = [int(v) for v in prf.rand_coefficients(1, 2 * ids + 1)] if len(ids) else []
        self.V: list[int] = []
        self.N: list[int] = []
        self.free: list[int] = []
        self.last = 0
        self.turn = 0
        self.k_orient = _ORIENT.kernel
        self.k_incircle = _INCIRCLE.kernel
        self.fast = self.k_orient is not None and self.k_incircle is not None

    # Predicates on vertex ids.  The interval kernel runs inline; only
    # uncertain cases pay for big-integer evaluation.

    def orient(self, a: int, b: int, c: int) -> int:
        xf, yf = self.xf, self.yf
        if self.fast and not DEBUG.both_paths and DEBUG.start_level <= 0:
            lo, hi = self.k_orient(xf[a], yf[a], xf[b], yf[b], xf[c], yf[c])
            if lo > 0:
                STATS.interval += 1
                return 1
            if hi < 0:
                STATS.interval += 1
                return -1
            xs, ys, ux, uy = self.xs, self.ys, self.y1x, self.y1y
            return sign_after_filter(_ORIENT, [xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]],
                                     [2 * a, 2 * a + 1, 2 * b, 2 * b + 1, 2 * c, 2 * c + 1],
                                     [ux[a], uy[a], ux[b], uy[b], ux[c], uy[c]])
        xs, ys = self.xs, self.ys
        return perturbed_sign(_ORIENT, [xs[a], ys[a], xs[b], ys[b], xs[c], ys[c]],
                              [2 * a, 2 * a + 1, 2 * b, 2 * b + 1, 2 * c, 2 * c + 1])

    def incircle(self, a: int, b: int, c: int, d: int) -> int:
        xf, yf = self.xf, self.yf
        if self.fast and not DEBUG.both_paths and DEBUG.start_level <= 0:
            lo, hi = self.k_incircle(xf[a], yf[a], xf[b], yf[b], xf[c], yf[c], xf[d], yf[d])
            if lo > 0:
                STATS.interval += 1
                return 1
            if hi < 0:
                STATS.interval += 1
                return -1
            xs, ys, ux, uy = self.xs, self.ys, self.y1x, self.y1y
            return sign_after_filter(
                _INCIRCLE, [xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]],
                [2 * a, 2 * a + 1, 2 * b, 2 * b + 1, 2 * c, 2 * c + 1, 2 * d, 2 * d + 1],
                [ux[a], uy[a], ux[b], uy[b], ux[c], uy[c], ux[d], uy[d]])
        xs, ys = self.xs, self.ys
        return perturbed_sign(
            _INCIRCLE, [xs[a], ys[a], xs[b], ys[b], xs[c], ys[c], xs[d], ys[d]],
            [2 * a, 2 * a + 1, 2 * b, 2 * b + 1, 2 * c, 2 * c + 1, 2 * d, 2 * d + 1])

    def new_triangle(self, a: int, b: int, c: int) -> int:
        if self.free:
            t = self.free.pop()
            self.V[3 * t:3 * t + 3] = (a, b, c)
            return t
        t = len(self.V) // 3
        self.V += (a, b, c)
        self.N += (-1, -1, -1)
        return t

    def in_conflict(self, t: int, p: int) -> bool:
        V = self.V
        a, b, c = V[3 * t], V[3 * t + 1], V[3 * t + 2]
        if c == GHOST:
            return self.orient(a, b, p) > 0
        if a == GHOST:
            return self.orient(b, c, p) > 0
        if b == GHOST:
            return self.orient(c, a, p) > 0
        return self.incircle(a, b, c, p) > 0

    def start(self, a: int, b: int, c: int) -> None:
        if self.orient(a, b, c) < 0:
            b, c = c, b
        t = self.new_triangle(a, b, c)
        g0 = self.new_triangle(c, b, GHOST)  # across edge bc (opposite a)
        g1 = self.new_triangle(a, c, GHOST)  # across ca (opposite b)
        g2 = self.new_triangle(b, a, GHOST)  # across ab (opposite c)
        N = self.N
        N[3 * t:3 * t + 3] = (g0, g1, g2)
        # Ghost (u, v, GHOST): neighbor opposite GHOST is the finite triangle,
        # opposite u is the ghost sharing edge (v, GHOST), opposite v the one sharing (GHOST, u).
        N[3 * g0:3 * g0 + 3] = (g2, g1, t)
        N[3 * g1:3 * g1 + 3] = (g0, g2, t)
        N[3 * g2:3 * g2 + 3] = (g1, g0, t)
        self.last = t

    def locate(self, p: int) -> int:
        V, N = self.V, self.N
        t = self.last
        prev = -1
        while True:
            base = 3 * t
            if GHOST in (V[base], V[base + 1], V[base + 2]):
                return t
            self.turn = (self.turn + 1) % 3
            r = self.turn
            for j in range(3):
                i = (r + j) % 3
                n = N[base + i]
                if n == prev:
                    continue
                u = V[base + (i + 1) % 3]
                v = V[base + (i + 2) % 3]
                if self.orient(u, v, p) < 0:
                    prev = t
                    t = n
                    break
            else:
                return t

    def insert(self, p: int) -> None:
        V, N = self.V, self.N
        t0 = self.locate(p)
        cavity = {t0}
        stack = [t0]
        boundary = []  # (u, v, outside triangle)
        checked = {}
        while stack:
            t = stack.pop()
            base = 3 * t
            for i in range(3):
                n = N[base + i]
                if n in cavity:
                    continue
                c = checked.get(n)
                if c is None:
                    c = checked[n] = self.in_conflict(n, p)
                if c:
                    cavity.add(n)
                    stack.append(n)
                else:
                    boundary.append((V[base + (i + 1) % 3], V[base + (i + 2) % 3], n))
        first = {}
        second = {}
        created = []
        for t in cavity:
            self.free.append(t)
        for u, v, outside in boundary:
            t = self.new_triangle(u, v, p)
            created.append(t)
            first[u] = t
            second[v] = t
            N[3 * t + 2] = outside
            ob = 3 * outside
            # Point the outside triangle's edge (v, u) at the new triangle.
            for i in range(3):
                if V[ob + (i + 1) % 3] == v and V[ob + (i + 2) % 3] == u:
                    N[ob + i] = t
                    break
        for t in created:
            u = V[3 * t]
            v = V[3 * t + 1]
            N[3 * t] = first[v]   # edge (v, p) is shared with the triangle starting at v
            N[3 * t + 1] = second[u]  # edge (p, u) with the triangle ending at u
        for t in created:
            if GHOST not in (V[3 * t], V[3 * t + 1]):
                self.last = t
                break
        else:  # pragma: no cover - a new point always makes a finite triangle
            self.last = created[0]

    def result(self, points) -> Triangulation:
        V, N = self.V, self.N
        dead = set(self.free)
        tri = Triangulation([(x, y) for x, y in zip(self.xs, self.ys)])
        finite = {}
        for t in range(len(V) // 3):
            if t in dead:
                continue
            a, b, c = V[3 * t:3 * t + 3]
            if GHOST in (a, b, c):
                g = (a, b, c).index(GHOST)
                tri.hull.append(((a, b, c)[(g + 1) % 3], (a, b, c)[(g + 2) % 3]))
            else:
                finite[t] = len(tri.triangles)
                tri.triangles.append((a, b, c))
        for t in finite:
            tri.neighbors.append(tuple(finite.get(N[3 * t + i], -1) for i in range(3)))
        return tri


def delaunay_triangulate(points, order: list[int] | None = None) -> Triangulation:
    """Delaunay triangulation of quantized points, duplicates included.

    With fewer than three points the result has no triangles.  ``order``
    overrides the insertion order (a permutation of point ids).
    """
    points = list(points)
    n = len(points)
    if n < 3:
        return Triangulation([(int(x), int(y)) for x, y in points])
    b = _Builder(points)
    if order is None:
        order = insertion_order(points)
    b.start(order[0], order[1], order[2])
    for p in order[3:]:
        b.insert(p)
    return b.result(points)


def check_triangulation(tri: Triangulation, empty_circle: bool = False) -> list[str]:
    """Problems found in ``tri`` (an empty list means it is valid).

    Checks orientation of every triangle, adjacency symmetry, that every
    vertex is used, and the Euler count (finite + hull = 2n - 2).  With
    ``empty_circle`` also runs the O(n t) brute-force Delaunay test.
    """
    from .predicates import Point, orientation

    problems = []
    pts = [Point(x, y, i) for i, (x, y) in enumerate(tri.points)]
    n = len(pts)
    if n < 3:
        if tri.triangles:
            problems.append("triangles present with fewer than three points")
        return problems
    for t, (a, b, c) in enumerate(tri.triangles):
        if orientation(pts[a], pts[b], pts[c]) <= 0:
            problems.append(f"triangle {t} is not counterclockwise")
    hull = set(tri.hull)
    edges = {}
    for t, (a, b, c) in enumerate(tri.triangles):
        for i, (u, v) in enumerate(((b, c), (c, a), (a, b))):
            if (u, v) in edges:
                problems.append(f"edge {(u, v)} used twice")
            edges[(u, v)] = (t, i)
    for (u, v), (t, i) in edges.items():
        nb = tri.neighbors[t][i]
        if nb == -1:
            if (u, v) not in hull and (v, u) not in hull:
                problems.append(f"edge {(u, v)} has no neighbor and is not on the hull")
            continue
        back = edges.get((v, u))
        if back is None or back[0] != nb or tri.neighbors[nb][back[1]] != t:
            problems.append(f"adjacency across {(u, v)} is not symmetric")
    for (a, b) in hull:
        if (b, a) not in edges:
            problems.append(f"hull edge {(a, b)} has no finite triangle")
    used = {v for t in tri.triangles for v in t}
    if len(used) != n:
        problems.append(f"{n - len(used)} vertices missing")
    if len(tri.triangles) + len(tri.hull) != 2 * n - 2:
        problems.append(f"Euler count {len(tri.triangles)} + {len(tri.hull)} != {2 * n - 2}")
    for (a, b) in tri.hull:
        for p in range(n):
            if p not in (a, b) and orientation(pts[a], pts[b], pts[p]) > 0:
                problems.append(f"point {p} outside hull edge {(a, b)}")
                break
    if empty_circle:
        # The builder's predicates compute the same perturbed signs, with
        # cached level-1 coefficients.
        bld = _Builder(tri.points)
        for t, (a, b, c) in enumerate(tri.triangles):
            for p in range(n):
                if p not in (a, b, c) and bld.incircle(a, b, c, p) > 0:
                    problems.append(f"point {p} inside circumcircle of triangle {t}")
    return problems


def format_mesh(tri: Triangulation) -> str:
    """Indexed triangle list: ``mesh <vertices> <triangles>``, then ``x y`` and ``a b c`` lines."""
    lines = [f"mesh {len(tri.points)} {len(tri.triangles)}"]
    lines += [f"{x} {y}" for x, y in tri.points]
    lines += [f"{a} {b} {c}" for a, b, c in tri.triangles]
    return "\n".join(lines) + "\n"


def parse_mesh(text: str) -> tuple[list[tuple[int, int]], list[tuple[int, int, int]]]:
    rows = text.split("\n")
    head = rows[0].split()
    if len(head) != 3 or head[0] != "mesh":
        raise ValueError("missing 'mesh <vertices> <triangles>' header")
    nv, nt = int(head[1]), int(head[2])
    pts = [tuple(int(v) for v in rows[1 + i].split()) for i in range(nv)]
    tris = [tuple(int(v) for v in rows[1 + nv + i].split()) for i in range(nt)]
    return pts, tris

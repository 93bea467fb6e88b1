"""Boolean operations on polygons bounded by circular arcs.

An input loop is a list of arc records ``(x, y, r, ccw, left)``.  Arc ``k``
runs along its circle, in the given direction, from its intersection with
the previous arc's circle to its intersection with the next one; ``left``
picks the end point: the intersection left of the line from this circle's
center to the next one's.  A loop with a single record is a full circle.

Every record gets its own perturbed circle, so repeated, tangent and
concentric circles are all generic after perturbation.  Winding numbers
are anchored by horizontal rays along input circle-center y coordinates,
the only lines whose crossings stay within the predicate degrees we
support.  Components that no such line touches are dropped.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from functools import cmp_to_key
from typing import NamedTuple

import numpy as np

from .arrangement import OPS, RULES, UNIT, Arrangement, BooleanError, Crossing, Curve
from .bvh import BoxTree
from .circles import (Circle, circle_intersection_point, circles_intersect, intersection_above_line,
                      intersection_below, intersection_right_half, line_hits_circle,
                      line_point_x_less)

__all__ = ["arc_boolean", "OutArc", "arc_loops_area", "arc_winding", "arcs_of_input",
           "parse_arc_polygons", "format_arc_polygons", "format_arc_output", "BooleanError"]


class OutArc(NamedTuple):
    """An arc of an output loop; ``start`` and ``end`` are None for a full circle.

    ``sweep`` is the signed angle swept (positive counterclockwise).  It is
    decided exactly when rounding makes the endpoints ambiguous, e.g. a
    nearly full arc between two nearly tangent circles.
    """

    circle: Circle
    ccw: bool
    start: tuple[int, int] | None
    end: tuple[int, int] | None
    sweep: float


def _vkey(c0: Circle, c1: Circle, left: bool):
    return ("v", c0.id, c1.id, left) if c0.id < c1.id else ("v", c1.id, c0.id, not left)


# Points on a circle C0: ("v", C1, left) is C0 ∩ C1 on the given branch,
# ("l", t, y, y_index) the crossing with a horizontal line (t = +1 right),
# ("b",) the bottom.  The linear order starts at the bottom and runs
# counterclockwise: right half upward, then left half downward.

def _right(c0, p) -> bool:
    if p[0] == "v":
        return intersection_right_half(c0, p[1], p[2])
    if p[0] == "l":
        return p[1] > 0
    raise ValueError("the bottom point has no half")


def _below(c0, p, q) -> bool:
    if p[0] == "v" and q[0] == "v":
        return intersection_below(c0, p[1], q[1], p[2], q[2])
    if p[0] == "v" and q[0] == "l":
        return not intersection_above_line(c0, p[1], p[2], q[2], q[3])
    if p[0] == "l" and q[0] == "v":
        return intersection_above_line(c0, q[1], q[2], p[2], p[3])
    raise ValueError("cannot compare two line points")


def _less(c0, p, q) -> bool:
    if q[0] == "b":
        return False
    if p[0] == "b":
        return True
    rp, rq = _right(c0, p), _right(c0, q)
    if rp != rq:
        return rp
    return _below(c0, p, q) if rp else _below(c0, q, p)


class _Arc:
    __slots__ = ("circle", "ccw", "start", "end", "skey", "ekey", "owner", "start_less_end")

    def __init__(self, circle, ccw, start, end, skey, ekey, owner):
        self.circle = circle
        self.ccw = ccw
        self.start = start  # point on circle, None for a full circle
        self.end = end
        self.skey = skey
        self.ekey = ekey
        self.owner = owner
        self.start_less_end = None

    def contains(self, p) -> bool:
        """Is p strictly inside the arc?"""
        if self.start is None:
            return True
        c = self.circle
        a, b = (self.start, self.end) if self.ccw else (self.end, self.start)
        if self.start_less_end is None:
            self.start_less_end = _less(c, self.start, self.end)
        ab = self.start_less_end if self.ccw else not self.start_less_end
        if ab:
            return _less(c, a, p) and _less(c, p, b)
        return _less(c, a, p) or _less(c, p, b)

    def before(self, p, q) -> bool:
        """Along the arc's direction, does p come before q?"""
        c = self.circle
        if self.start is None:
            return _less(c, p, q) if self.ccw else _less(c, q, p)
        s = self.start
        if self.ccw:
            ap, aq = _less(c, s, p), _less(c, s, q)
            if ap != aq:
                return ap
            return _less(c, p, q)
        bp, bq = _less(c, p, s), _less(c, q, s)
        if bp != bq:
            return bp
        return _less(c, q, p)


def _angle(c, xy):
    return math.atan2(xy[1] - c.y, xy[0] - c.x)


def _box(arc: _Arc, sxy, exy):
    c = arc.circle
    margin = 4.0 + 1e-12 * (abs(c.x) + abs(c.y) + c.r)
    if arc.start is None or (abs(sxy[0] - exy[0]) <= 2 and abs(sxy[1] - exy[1]) <= 2):
        return (c.x - c.r - margin, c.y - c.r - margin, c.x + c.r + margin, c.y + c.r + margin)
    t0, t1 = _angle(c, sxy), _angle(c, exy)
    if not arc.ccw:
        t0, t1 = t1, t0
    tau = 2 * math.pi
    span = (t1 - t0) % tau
    tol = 4.0 / c.r + 1e-9
    xs = [sxy[0], exy[0]]
    ys = [sxy[1], exy[1]]
    for k, (dx, dy) in enumerate(((1, 0), (0, 1), (-1, 0), (0, -1))):
        d = (k * math.pi / 2 - t0) % tau
        if d <= span + tol or d >= tau - tol:
            xs.append(c.x + dx * c.r)
            ys.append(c.y + dy * c.r)
    return (min(xs) - margin, min(ys) - margin, max(xs) + margin, max(ys) + margin)


def _sweep(arc: _Arc, sxy, exy) -> float:
    tau = 2 * math.pi
    sign = 1.0 if arc.ccw else -1.0
    if arc.start is None:
        return sign * tau
    c = arc.circle
    raw = (sign * (_angle(c, exy) - _angle(c, sxy))) % tau
    tol = 8.0 / c.r + 1e-9
    if tol < raw < tau - tol:
        return sign * raw
    # Nearly empty or nearly full: ask whether the arc reaches the extreme
    # point on the far side of its start.
    t = -1 if sxy[0] >= c.x else 1
    full = arc.contains(("l", t, c.y, 3 * c.id + 1))
    if full:
        return sign * (raw if raw > math.pi else tau)
    return sign * (raw if raw < math.pi else 0.0)


def _point_on(c: Circle, key, circles):
    """Point on circle c for a vertex key (None for the bottom)."""
    if key[0] == "b":
        return ("b",)
    _, i0, i1, left = key
    if c.id == i0:
        return ("v", circles[i1], left)
    return ("v", circles[i0], not left)


def input_arcs(loops, first_id: int = 0):
    """Assign circle ids: one fresh perturbed circle per arc record."""
    out = []
    k = first_id
    for loop in loops:
        cur = []
        for rec in loop:
            x, y, r, ccw, left = rec
            if r <= 0:
                raise ValueError("radii must be positive")
            cur.append((Circle(int(x), int(y), int(r), k), bool(ccw), bool(left)))
            k += 1
        if cur:
            out.append(cur)
    return out, k


def arc_boolean(a, b, op: str = "union", rule: str = "nonzero") -> list[list[OutArc]]:
    """``a op b`` for arc-polygon sets; returns loops of :class:`OutArc`."""
    if op not in OPS:
        raise ValueError(f"unknown operation {op!r}")
    if rule not in RULES:
        raise ValueError(f"unknown winding rule {rule!r}")
    loops_a, nxt = input_arcs(a, 0)
    loops_b, _ = input_arcs(b, nxt)

    arcs: list[_Arc] = []
    curves: list[Curve] = []
    loops: list[list[int]] = []
    boxes = []
    for owner, group in ((0, loops_a), (1, loops_b)):
        for recs in group:
            idx = []
            n = len(recs)
            for k, (c, ccw, left) in enumerate(recs):
                if n == 1:
                    arc = _Arc(c, ccw, None, None, ("b", c.id), ("b", c.id), owner)
                    sxy = exy = None
                else:
                    pc, _, pleft = recs[k - 1]
                    nc, _, _ = recs[(k + 1) % n]
                    for u, v in ((pc, c), (c, nc)):
                        if not circles_intersect(u, v):
                            raise ValueError(f"consecutive arc circles {u} and {v} do not cross")
                    start = ("v", pc, not pleft)
                    end = ("v", nc, left)
                    if _vkey(pc, c, pleft) == _vkey(c, nc, left):
                        raise ValueError(f"arc on {c} starts and ends at the same vertex")
                    arc = _Arc(c, ccw, start, end, _vkey(pc, c, pleft), _vkey(c, nc, left), owner)
                    sxy = circle_intersection_point(pc, c, pleft)
                    exy = circle_intersection_point(c, nc, left)
                idx.append(len(arcs))
                arcs.append(arc)
                boxes.append(_box(arc, sxy, exy))
                curves.append(Curve(owner, len(loops), arc.skey, arc.ekey))
            loops.append(idx)

    tree = BoxTree(boxes)
    crossings: list[Crossing] = []
    on_curve: dict[tuple[int, int], tuple] = {}
    for i, j in tree.pairs():
        ai, aj = arcs[i], arcs[j]
        ci, cj = ai.circle, aj.circle
        if not circles_intersect(ci, cj):
            continue
        ends = {ai.skey, ai.ekey, aj.skey, aj.ekey}
        for left in (True, False):
            key = _vkey(ci, cj, left)
            if key in ends:
                continue
            pi = ("v", cj, left)
            pj = ("v", ci, not left)
            if ai.contains(pi) and aj.contains(pj):
                s = (1 if left else -1) * (1 if ai.ccw else -1) * (1 if aj.ccw else -1)
                on_curve[(len(crossings), i)] = pi
                on_curve[(len(crossings), j)] = pj
                crossings.append(Crossing(i, j, s, key))

    def order(i, ids):
        arc = arcs[i]

        def cmp(x, y):
            return -1 if arc.before(on_curve[(x, i)], on_curve[(y, i)]) else 1

        return sorted(ids, key=cmp_to_key(cmp))

    lines = sorted({(c.y, 3 * c.id + 1) for grp in (loops_a, loops_b) for recs in grp for c, _, _ in recs})
    line_ys = [y for y, _ in lines]

    def far_winding(i, t, y, yi):
        """Winding number of the ray leftward from line point t of arc i, excluding arc i there."""
        ci = arcs[i].circle
        w = [0, 0]
        for k in tree.stab_y(y):
            ak = arcs[k]
            ck = ak.circle
            if not line_hits_circle(ck, y, yi):
                continue
            for tk in (1, -1):
                if k == i and tk == t:
                    continue
                if not ak.contains(("l", tk, y, yi)):
                    continue
                if line_point_x_less(ck, tk, ci, t, y, yi):
                    o = UNIT[ak.owner]
                    sgn = -1 if (tk > 0) == ak.ccw else 1
                    w[0] += sgn * o[0]
                    w[1] += sgn * o[1]
        return w

    def try_line(i, y, yi):
        arc = arcs[i]
        if not line_hits_circle(arc.circle, y, yi):
            return None
        for t in (1, -1):
            z = ("l", t, y, yi)
            if not arc.contains(z):
                continue
            j = sum(1 for x in curves[i].crossings if arc.before(on_curve[(x, i)], z))
            w = far_winding(i, t, y, yi)
            if (t > 0) == arc.ccw:  # the arc runs upward at z
                o = UNIT[arc.owner]
                w[0] -= o[0]
                w[1] -= o[1]
            return i, j, tuple(w)
        return None

    def anchor(lp):
        for i in loops[lp]:
            c = arcs[i].circle
            got = try_line(i, c.y, 3 * c.id + 1)
            if got is not None:
                return got
        lo = min(boxes[i][1] for i in loops[lp])
        hi = max(boxes[i][3] for i in loops[lp])
        for y, yi in lines[bisect_left(line_ys, lo):bisect_right(line_ys, hi)]:
            for i in loops[lp]:
                if boxes[i][1] <= y <= boxes[i][3]:
                    got = try_line(i, y, yi)
                    if got is not None:
                        return got
        return None

    arr = Arrangement(curves, loops, crossings, order, anchor)

    circle_by_id = {arc.circle.id: arc.circle for arc in arcs}
    out = []
    for loop in arr.select(op, rule):
        pieces = []
        for i, j, fwd in loop:
            arc = arcs[i]
            start = arr.vertex_after(i, j, not fwd)[1]
            end = arr.vertex_after(i, j, fwd)[1]
            pieces.append([arc.circle, arc.ccw == fwd, start, end])
        out.append(_merge(pieces, circle_by_id))
    return out


def _merge(pieces, circles):
    """Join consecutive pieces of one circle that meet at its bottom point."""
    merged = []
    for p in pieces:
        if merged and merged[-1][0].id == p[0].id and p[2][0] == "b":
            merged[-1][3] = p[3]
        else:
            merged.append(list(p))
    if len(merged) > 1 and merged[0][0].id == merged[-1][0].id and merged[0][2][0] == "b":
        merged[-1][3] = merged[0][3]
        merged.pop(0)
    out = []
    for c, ccw, skey, ekey in merged:
        if skey[0] == "b" and ekey[0] == "b":
            out.append(OutArc(c, ccw, None, None, 2 * math.pi if ccw else -2 * math.pi))
            continue
        sxy = circle_intersection_point(circles[skey[1]], circles[skey[2]], skey[3])
        exy = circle_intersection_point(circles[ekey[1]], circles[ekey[2]], ekey[3])
        arc = _Arc(c, ccw, _point_on(c, skey, circles), _point_on(c, ekey, circles), skey, ekey, 0)
        out.append(OutArc(c, ccw, sxy, exy, _sweep(arc, sxy, exy)))
    return out


def _arc_angles(arc: OutArc):
    t0 = 0.0 if arc.start is None else _angle(arc.circle, arc.start)
    return t0, arc.sweep


def arc_loops_area(loops) -> float:
    """Signed area enclosed by loops of :class:`OutArc` (Green's theorem)."""
    total = 0.0
    for loop in loops:
        for arc in loop:
            c = arc.circle
            t0, sweep = _arc_angles(arc)
            t1 = t0 + sweep
            total += 0.5 * (c.r * c.r * sweep + c.x * c.r * (math.sin(t1) - math.sin(t0))
                            - c.y * c.r * (math.cos(t1) - math.cos(t0)))
    return total


def arc_winding(loops, xs, ys) -> np.ndarray:
    """Winding numbers of loops of :class:`OutArc` at sample points (float, vectorised).

    Reliable for points that are not within a few units of the boundary.
    """
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    w = np.zeros(xs.shape, dtype=np.int64)
    tau = 2 * math.pi
    for loop in loops:
        for arc in loop:
            c = arc.circle
            cx, cy, r = float(c.x), float(c.y), float(c.r)
            dy = ys - cy
            hit = np.abs(dy) < r
            if not hit.any():
                continue
            dx = np.sqrt(np.maximum(r * r - dy * dy, 0.0))
            t0, sweep = _arc_angles(arc)
            lo = t0 if sweep >= 0 else t0 + sweep
            span = abs(sweep)
            for t in (1.0, -1.0):
                px = cx + t * dx
                m = hit & (px < xs)
                if arc.start is not None:
                    ang = np.arctan2(dy, t * dx)
                    m &= ((ang - lo) % tau) < span
                upward = (t > 0) == arc.ccw
                w[m] += -1 if upward else 1
    return w


def arcs_of_input(loops) -> list[list[OutArc]]:
    """Input arc records as :class:`OutArc` loops (rounded vertices), for oracles."""
    group, _ = input_arcs(loops)
    out = []
    for recs in group:
        n = len(recs)
        if n == 1:
            c, ccw, _ = recs[0]
            out.append([OutArc(c, ccw, None, None, 2 * math.pi if ccw else -2 * math.pi)])
            continue
        cur = []
        for k, (c, ccw, left) in enumerate(recs):
            pc, _, pleft = recs[k - 1]
            nc = recs[(k + 1) % n][0]
            sxy = circle_intersection_point(pc, c, pleft)
            exy = circle_intersection_point(c, nc, left)
            arc = _Arc(c, ccw, ("v", pc, not pleft), ("v", nc, left), None, None, 0)
            cur.append(OutArc(c, ccw, sxy, exy, _sweep(arc, sxy, exy)))
        out.append(cur)
    return out


def parse_arc_polygons(text: str):
    """Read arc loops: ``x y r ccw|cw L|R`` per line, loops separated by blank lines.

    ``L``/``R`` selects the arc's end point on the next circle.  A block
    with one line is a full circle.  ``#`` starts a comment line.
    """
    loops = []
    cur = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if cur:
                loops.append(cur)
                cur = []
            continue
        parts = line.split()
        if len(parts) != 5 or parts[3] not in ("ccw", "cw") or parts[4] not in ("L", "R"):
            raise ValueError(f"expected 'x y r ccw|cw L|R', got {raw!r}")
        cur.append((int(parts[0]), int(parts[1]), int(parts[2]), parts[3] == "ccw", parts[4] == "L"))
    if cur:
        loops.append(cur)
    return loops


def format_arc_polygons(loops) -> str:
    """Write input-style arc records (5-tuples) in the format read by :func:`parse_arc_polygons`."""
    blocks = []
    for loop in loops:
        blocks.append("\n".join(f"{x} {y} {r} {'ccw' if ccw else 'cw'} {'L' if left else 'R'}"
                                 for x, y, r, ccw, left in loop))
    return "\n\n".join(blocks) + "\n"


def format_arc_output(loops) -> str:
    """Output loops: ``x y r ccw|cw sx sy ex ey`` per arc (``-`` for a full circle)."""
    blocks = []
    for loop in loops:
        lines = []
        for a in loop:
            c = a.circle
            d = "ccw" if a.ccw else "cw"
            if a.start is None:
                lines.append(f"{c.x} {c.y} {c.r} {d} - - - -")
            else:
                lines.append(f"{c.x} {c.y} {c.r} {d} {a.start[0]} {a.start[1]} {a.end[0]} {a.end[1]}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"

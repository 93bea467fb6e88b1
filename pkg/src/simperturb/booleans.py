"""Boolean operations on polygon sets with straight edges.

A polygon set is a list of loops, each a list of integer ``(x, y)``
vertices.  The region is defined by winding number (nonzero by default), so
loops may self-intersect, overlap or repeat; holes are loops wound the
other way.  Every input vertex becomes its own perturbed point, so two
loops that share an edge exactly are resolved consistently by the
perturbation instead of special cases.

Output vertices are either input vertices or crossings rounded to the
nearest integer.
"""

from __future__ import annotations

from functools import cmp_to_key

from .arrangement import OPS, RULES, UNIT, Arrangement, BooleanError, Crossing, Curve
from .bvh import BoxTree
from .predicates import (Point, crossing_sign, intersection_point, orientation, param_less,
                         segments_intersect, y_less)

__all__ = ["polygon_boolean", "BooleanError", "parse_polygons", "format_polygons",
           "winding_number", "OPS", "RULES"]


def _points(loops, first_id):
    out = []
    k = first_id
    for loop in loops:
        pts = []
        for x, y in loop:
            pts.append(Point(int(x), int(y), k))
            k += 1
        if len(pts) >= 3:
            out.append(pts)
    return out, k


def polygon_boolean(a, b, op: str = "union", rule: str = "nonzero") -> list[list[tuple[int, int]]]:
    """``a op b`` for polygon sets ``a`` and ``b``.

    ``op`` is one of union, intersection, difference or xor; ``rule`` is
    nonzero or evenodd.  Returns output loops with the region on their left.
    """
    if op not in OPS:
        raise ValueError(f"unknown operation {op!r}")
    if rule not in RULES:
        raise ValueError(f"unknown winding rule {rule!r}")
    loops_a, nxt = _points(a, 0)
    loops_b, _ = _points(b, nxt)

    curves: list[Curve] = []
    ends: list[tuple[Point, Point]] = []
    loops: list[list[int]] = []
    for owner, group in ((0, loops_a), (1, loops_b)):
        for pts in group:
            idx = []
            for k, p in enumerate(pts):
                q = pts[(k + 1) % len(pts)]
                idx.append(len(curves))
                curves.append(Curve(owner, len(loops), p.id, q.id))
                ends.append((p, q))
            loops.append(idx)

    boxes = [(min(p.x, q.x), min(p.y, q.y), max(p.x, q.x), max(p.y, q.y)) for p, q in ends]
    tree = BoxTree(boxes)
    crossings = []
    for i, j in tree.pairs():
        p, q = ends[i]
        r, s = ends[j]
        if {p.id, q.id} & {r.id, s.id}:
            continue
        if segments_intersect(p, q, r, s):
            crossings.append(Crossing(i, j, crossing_sign(p, q, r, s), (i, j)))

    def order(i, ids):
        p, q = ends[i]

        def other(x):
            cr = crossings[x]
            return ends[cr.b if cr.a == i else cr.a]

        def cmp(x, y):
            (r, s), (t, u) = other(x), other(y)
            return -1 if param_less(p, q, r, s, t, u) else 1

        return sorted(ids, key=cmp_to_key(cmp))

    def anchor(lp):
        first = loops[lp][0]
        v, w = ends[first]
        u = ends[loops[lp][-1]][0]
        w_right = [0, 0]
        for k in tree.stab_y(v.y):
            p, q = ends[k]
            if v.id in (p.id, q.id):
                continue
            below_p = y_less(p, v)
            if below_p == y_less(q, v):
                continue
            o = UNIT[curves[k].owner]
            if below_p:  # upward edge
                if orientation(p, q, v) < 0:
                    w_right[0] -= o[0]
                    w_right[1] -= o[1]
            elif orientation(p, q, v) > 0:
                w_right[0] += o[0]
                w_right[1] += o[1]
        # The leftward ray from v lies on the left of u -> v -> w exactly
        # when it is angularly between the outgoing and incoming edges.
        u_below = y_less(u, v)
        w_below = y_less(w, v)
        if u_below != w_below:
            left_of_path = u_below
        else:
            left_of_path = orientation(v, u, w) > 0
        if left_of_path:
            o = UNIT[curves[first].owner]
            w_right[0] -= o[0]
            w_right[1] -= o[1]
        return first, 0, tuple(w_right)

    arr = Arrangement(curves, loops, crossings, order, anchor)
    points = {p.id: (p.x, p.y) for group in (loops_a, loops_b) for pts in group for p in pts}
    coords = {}
    out = []
    for loop in arr.select(op, rule):
        verts = []
        for i, j, fwd in loop:
            kind, key = arr.vertex_after(i, j, fwd)
            if kind == "v":
                verts.append(points[key])
                continue
            xy = coords.get(key)
            if xy is None:
                e, f = key
                xy = coords[key] = intersection_point(*ends[e], *ends[f])
            verts.append(xy)
        # Start from the vertex the first sub-edge leaves.
        out.append(verts[-1:] + verts[:-1])
    return out


def winding_number(loops, x, y) -> int:
    """Exact winding number of integer or rational-free loops around (x, y).

    The point must not lie on an edge.  Used as a reference oracle.
    """
    w = 0
    for loop in loops:
        n = len(loop)
        for k in range(n):
            x0, y0 = loop[k]
            x1, y1 = loop[(k + 1) % n]
            if y0 <= y < y1:
                if (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) > 0:
                    w += 1
            elif y1 <= y < y0:
                if (x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) < 0:
                    w -= 1
    return w


def parse_polygons(text: str) -> list[list[tuple[int, int]]]:
    """Read loops: one ``x y`` vertex per line, loops separated by blank lines.

    Lines starting with ``#`` are comments.
    """
    loops = []
    cur: list[tuple[int, int]] = []
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
        if len(parts) != 2:
            raise ValueError(f"expected 'x y', got {raw!r}")
        cur.append((int(parts[0]), int(parts[1])))
    if cur:
        loops.append(cur)
    return loops


def format_polygons(loops) -> str:
    return "\n\n".join("\n".join(f"{x} {y}" for x, y in loop) for loop in loops) + "\n"

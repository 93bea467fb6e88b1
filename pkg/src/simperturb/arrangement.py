"""Winding-number Boolean engine shared by straight and circular-arc polygons.

The engine sees only combinatorics: loops made of curves, crossings
between curves (with the sign of the tangent cross product), and a
geometric callback that anchors the winding number of one sub-curve.
Everything else follows from two local rules.

Walking along a curve ``a`` through a crossing with ``b``, the winding
number just right of ``a`` changes by ``-c * u_b`` where ``c`` is the sign
of ``cross(t_a, t_b)`` and ``u_b`` is b's unit winding vector.  At a loop
vertex only two curves meet, so the right-hand winding number passes
through unchanged.  Hence one anchor fixes a whole connected component.

Winding numbers are pairs ``(w_a, w_b)``, one per operand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable


class BooleanError(RuntimeError):
    """Stitching or winding propagation failed: a predicate or logic bug."""


UNIT = ((1, 0), (0, 1))


def _add(w, u, k=1):
    return (w[0] + k * u[0], w[1] + k * u[1])


OPS = {
    "union": lambda a, b: a or b,
    "intersection": lambda a, b: a and b,
    "difference": lambda a, b: a and not b,
    "xor": lambda a, b: a != b,
}

RULES = {
    "nonzero": lambda w: w != 0,
    "evenodd": lambda w: w % 2 != 0,
}


@dataclass
class Curve:
    owner: int
    loop: int
    start: object  # vertex key
    end: object
    crossings: list = field(default_factory=list)  # crossing ids, in order along the curve


@dataclass
class Crossing:
    a: int
    b: int
    c: int  # sign of cross(t_a, t_b)
    key: object
    ja: int = -1  # position along a (set after sorting)
    jb: int = -1


class Arrangement:
    """Curves, crossings and the Boolean selection over them.

    ``order_crossings(curve_index, crossing_ids)`` must return the ids
    sorted along the curve's direction.  ``anchor(loop_index)`` returns
    ``(curve_index, sub_index, winding)`` for the right side of one
    sub-curve of that loop, or None when the loop cannot be anchored.
    """

    def __init__(self, curves: list[Curve], loops: list[list[int]], crossings: list[Crossing],
                 order_crossings: Callable, anchor: Callable):
        self.curves = curves
        self.loops = loops
        self.crossings = crossings
        self.anchor = anchor
        self._pos = {i: p for lp in loops for p, i in enumerate(lp)}
        for x, cr in enumerate(crossings):
            curves[cr.a].crossings.append(x)
            curves[cr.b].crossings.append(x)
        for i, cv in enumerate(curves):
            if len(cv.crossings) > 1:
                cv.crossings = list(order_crossings(i, cv.crossings))
            for j, x in enumerate(cv.crossings):
                cr = crossings[x]
                if cr.a == i:
                    cr.ja = j
                else:
                    cr.jb = j
        self.right: dict[tuple[int, int], tuple[int, int]] = {}
        self.discarded: set[int] = set()
        self._wind()

    # Winding numbers.

    def _relative(self, loop):
        rel = {}
        w = (0, 0)
        for i in self.loops[loop]:
            cv = self.curves[i]
            rel[(i, 0)] = w
            for j, x in enumerate(cv.crossings):
                cr = self.crossings[x]
                if cr.a == i:
                    w = _add(w, UNIT[self.curves[cr.b].owner], -cr.c)
                else:
                    w = _add(w, UNIT[self.curves[cr.a].owner], cr.c)
                rel[(i, j + 1)] = w
        if w != (0, 0):
            raise BooleanError(f"winding does not close around loop {loop}")
        return rel

    def _b_in(self, cr, w_a_in):
        ua = UNIT[self.curves[cr.a].owner]
        ub = UNIT[self.curves[cr.b].owner]
        return _add(w_a_in, ub, -1) if cr.c > 0 else _add(w_a_in, ua)

    def _wind(self):
        rel = [self._relative(k) for k in range(len(self.loops))]
        by_loop: dict[int, list[int]] = {}
        for x, cr in enumerate(self.crossings):
            by_loop.setdefault(self.curves[cr.a].loop, []).append(x)
            by_loop.setdefault(self.curves[cr.b].loop, []).append(x)
        offset: dict[int, tuple[int, int]] = {}
        for root in range(len(self.loops)):
            if root in offset:
                continue
            comp = [root]
            offset[root] = (0, 0)
            stack = [root]
            while stack:
                lp = stack.pop()
                for x in by_loop.get(lp, ()):
                    cr = self.crossings[x]
                    la = self.curves[cr.a].loop
                    lb = self.curves[cr.b].loop
                    if la == lp and lb not in offset:
                        w_a = _add(offset[la], rel[la][(cr.a, cr.ja)])
                        w_b = self._b_in(cr, w_a)
                        offset[lb] = _add(w_b, rel[lb][(cr.b, cr.jb)], -1)
                        comp.append(lb)
                        stack.append(lb)
                    elif lb == lp and la not in offset:
                        w_b = _add(offset[lb], rel[lb][(cr.b, cr.jb)])
                        # _b_in is a fixed shift, so invert it by subtracting.
                        w_a = _add(w_b, self._b_in(cr, (0, 0)), -1)
                        offset[la] = _add(w_a, rel[la][(cr.a, cr.ja)], -1)
                        comp.append(la)
                        stack.append(la)
            shift = None
            for lp in comp:
                got = self.anchor(lp)
                if got is not None:
                    i, j, w = got
                    shift = _add(w, _add(offset[lp], rel[lp][(i, j)]), -1)
                    break
            if shift is None:
                self.discarded.update(comp)
                continue
            for lp in comp:
                base = _add(offset[lp], shift)
                for s, w in rel[lp].items():
                    self.right[s] = _add(base, w)
        for cr in self.crossings:
            wa = self.right.get((cr.a, cr.ja))
            wb = self.right.get((cr.b, cr.jb))
            if wa is None or wb is None:
                continue
            if self._b_in(cr, wa) != wb:
                raise BooleanError(f"inconsistent winding at crossing {cr.key}")

    # Selection and stitching.

    def select(self, op: str = "union", rule: str = "nonzero") -> list[list[tuple[int, int, bool]]]:
        """Loops of kept sub-curves ``(curve, sub_index, forward)`` for the operation."""
        combine = OPS[op]
        inside_w = RULES[rule]

        def inside(w):
            return combine(inside_w(w[0]), inside_w(w[1]))

        kept: dict[tuple[int, int], bool] = {}
        for s, w in self.right.items():
            u = UNIT[self.curves[s[0]].owner]
            left = inside(_add(w, u))
            if left != inside(w):
                kept[s] = left
        succ = {}
        for s, fwd in kept.items():
            succ[s] = self._successor(s, fwd, kept)
        loops = []
        seen = set()
        for s in kept:
            if s in seen:
                continue
            loop = []
            t = s
            while t not in seen:
                seen.add(t)
                loop.append((t[0], t[1], kept[t]))
                t = succ[t]
            if t != s:
                raise BooleanError("stitched path does not close")
            loops.append(loop)
        return loops

    def _successor(self, s, fwd, kept):
        i, j = s
        cv = self.curves[i]
        n = len(cv.crossings)
        at = j if fwd else j - 1  # index of the crossing we arrive at
        if 0 <= at < n:
            cr = self.crossings[cv.crossings[at]]
            if cr.c > 0:
                rays = [(cr.a, cr.ja + 1), (cr.b, cr.jb + 1), (cr.a, cr.ja), (cr.b, cr.jb)]
            else:
                rays = [(cr.b, cr.jb + 1), (cr.a, cr.ja + 1), (cr.b, cr.jb), (cr.a, cr.ja)]
            # rays[0], rays[1] leave the crossing geometrically; rays[2], rays[3] arrive.
            k = rays.index(s)
            for step in range(1, 4):
                r = rays[(k - step) % 4]
                if r in kept:
                    leaves = (rays.index(r) < 2) == kept[r]
                    if not leaves:
                        raise BooleanError(f"two incoming curves meet at crossing {cr.key}")
                    return r
            raise BooleanError(f"dead end at crossing {cr.key}")
        # A loop vertex: continue along the loop.
        loop = self.loops[cv.loop]
        pos = self._pos[i]
        if fwd:
            t = (i, j + 1) if j < n else (loop[(pos + 1) % len(loop)], 0)
        else:
            if j > 0:
                t = (i, j - 1)
            else:
                prev = loop[(pos - 1) % len(loop)]
                t = (prev, len(self.curves[prev].crossings))
        if kept.get(t) is not fwd:
            raise BooleanError("selection changes at a loop vertex")
        return t

    def vertex_after(self, i: int, j: int, fwd: bool):
        """Key of the vertex at the end of oriented sub-curve (i, j)."""
        cv = self.curves[i]
        n = len(cv.crossings)
        if fwd:
            return ("x", self.crossings[cv.crossings[j]].key) if j < n else ("v", cv.end)
        return ("x", self.crossings[cv.crossings[j - 1]].key) if j > 0 else ("v", cv.start)

"""Perturbed circle predicates and circle intersection constructions.

A :class:`Circle` is perturbed under global indices ``3*id``, ``3*id + 1``
and ``3*id + 2`` (center x, center y, radius).  An intersection of C0 and
C1 is named by the ordered pair and a branch: ``left=True`` is the point to
the left of the directed line from c0 to c1.  The same point is
``(C1, C0, not left)``.

Every sign that mixes square roots is decided by squaring in stages; each
stage's polynomial goes through the full interval -> exact -> perturbation
cascade, and none has degree above 8.
"""

from __future__ import annotations

from typing import NamedTuple

from . import prf
from .numeric import Predicate
from .perturb import perturbed_construction, perturbed_sign
from .polys import PREDICATES, circle_x_mul, circle_y_mul

P = PREDICATES


class Circle(NamedTuple):
    x: int
    y: int
    r: int
    id: int


def _flat(*cs):
    values = []
    indices = []
    for c in cs:
        values += (c.x, c.y, c.r)
        i = 3 * c.id
        indices += (i, i + 1, i + 2)
    return values, indices


def _sign(name: str, *cs) -> int:
    return perturbed_sign(P[name], *_flat(*cs))


def _dx_sign(c0: Circle, c1: Circle) -> int:
    return perturbed_sign(P["diff"], [c1.x, c0.x], [3 * c1.id, 3 * c0.id])


def _dy_sign(c0: Circle, c1: Circle) -> int:
    return perturbed_sign(P["diff"], [c1.y, c0.y], [3 * c1.id + 1, 3 * c0.id + 1])


def circles_intersect(c0: Circle, c1: Circle) -> bool:
    """Do the perturbed circles cross (at two points)?"""
    if c0.id == c1.id:
        raise ValueError("a circle does not intersect itself")
    return _sign("circle_beta2", c0, c1) > 0


# Multipliers of sqrt(beta2) for the right branch are the negated left ones.
_X_MUL_R = Predicate("circle_x_mul_r", lambda *a: -circle_x_mul(*a), 6, 1)
_Y_MUL_R = Predicate("circle_y_mul_r", lambda *a: -circle_y_mul(*a), 6, 1)

_point_cache: dict = {}

#: Decide from cached rounded coordinates when they are far enough apart.
#: Turning this off forces every comparison through the polynomial cascade.
SHORTCUTS = True


def _canonical(c0: Circle, c1: Circle, left: bool):
    return (c0, c1, left) if c0.id < c1.id else (c1, c0, not left)


def circle_intersection_point(c0: Circle, c1: Circle, left: bool) -> tuple[int, int]:
    """Rounded intersection point, within 1/2 per coordinate of the exact one.

    Results are memoised per seed and canonical (pair, branch) key.
    """
    key = _canonical(c0, c1, left)
    ck = (prf.get_seed(), key)
    pt = _point_cache.get(ck)
    if pt is None:
        a, b, lf = key
        values, indices = _flat(a, b)
        if lf:
            muls = (P["circle_x_mul"], P["circle_y_mul"])
        else:
            muls = (_X_MUL_R, _Y_MUL_R)
        beta2 = P["circle_beta2"]
        x, y = perturbed_construction(
            [P["circle_x_num"], P["circle_y_num"]], P["circle_den"], values, indices,
            [(beta2, muls[0]), (beta2, muls[1])])
        pt = _point_cache[ck] = (x, y)
    return pt


def clear_cache() -> None:
    _point_cache.clear()


def _root_sum_sign(sa: int, sb: int, disc) -> int:
    """Sign of a + b sqrt(c) (c > 0) from sign(a), sign(b) and sign(a^2 - b^2 c)."""
    if sa == sb:
        return sa
    return sa if disc() > 0 else -sa


def intersection_right_half(c0: Circle, c1: Circle, left: bool) -> bool:
    """Is the intersection strictly right of c0's center?"""
    if SHORTCUTS:
        x, _ = circle_intersection_point(c0, c1, left)
        if x - c0.x >= 1:
            return True
        if c0.x - x >= 1:
            return False
    s = 1 if left else -1
    sa = _sign("circle_alpha", c0, c1) * _dx_sign(c0, c1)
    sb = -s * _dy_sign(c0, c1)
    return _root_sum_sign(sa, sb, lambda: _sign("circle_half_disc", c0, c1)) > 0


def intersection_above_line(c0: Circle, c1: Circle, left: bool, y: int, y_index: int) -> bool:
    """Is the intersection strictly above the horizontal line at coordinate ``y``?

    ``y_index`` is the global index of that coordinate (a circle center y).
    """
    if SHORTCUTS:
        _, py = circle_intersection_point(c0, c1, left)
        if py - y >= 1:
            return True
        if y - py >= 1:
            return False
    values, indices = _flat(c0, c1)
    values.append(y)
    indices.append(y_index)
    s = 1 if left else -1
    sa = perturbed_sign(P["hline_a"], values, indices)
    sb = s * _dx_sign(c0, c1)
    return _root_sum_sign(sa, sb, lambda: perturbed_sign(P["hline_disc"], values, indices)) > 0


def _two_root_sign(sa: int, s1: int, s2: int, l_only2, l_only1, m_sign, e_sign) -> int:
    """Sign of A + B1 sqrt(C1) + B2 sqrt(C2), C1, C2 > 0, by staged squaring.

    ``l_only2`` gives sign(A^2 + B1^2 C1 - B2^2 C2) (used when only B2
    disagrees with A), ``l_only1`` the mirror, ``m_sign`` gives
    sign(A^2 - B1^2 C1 - B2^2 C2) and ``e_sign`` the sign of the fully
    squared polynomial (l^2 - 4 A^2 B1^2 C1, which is the same for all cases).
    """
    if s1 == sa and s2 == sa:
        return sa
    if s1 == sa:
        inner = 1 if l_only2() > 0 else -e_sign()
    elif s2 == sa:
        inner = 1 if l_only1() > 0 else -e_sign()
    else:
        inner = -1 if m_sign() < 0 else e_sign()
    return sa * inner


def intersection_below(c0: Circle, c1: Circle, c2: Circle, left01: bool, left02: bool) -> bool:
    """Is the intersection (c0, c1, left01) strictly below (c0, c2, left02)?

    Both intersections must exist.  c1 and c2 must be distinct circles
    (distinct ids), although they may coincide geometrically.
    """
    if c1.id == c2.id:
        if left01 == left02:
            raise ValueError("comparing an intersection with itself")
        return _same_pair_below(c0, c1, left01)
    if SHORTCUTS:
        y1 = circle_intersection_point(c0, c1, left01)[1]
        y2 = circle_intersection_point(c0, c2, left02)[1]
        if y2 - y1 >= 2:
            return True
        if y1 - y2 >= 2:
            return False
    s01 = 1 if left01 else -1
    s02 = 1 if left02 else -1
    sa = _sign("below_a", c0, c1, c2)
    s1 = -s01 * _dx_sign(c0, c1)
    s2 = s02 * _dx_sign(c0, c2)

    def e_sign():
        return _sign("below_ep", c0, c1, c2) * _sign("below_em", c0, c1, c2)

    return _two_root_sign(
        sa, s1, s2,
        lambda: _sign("below_f8", c0, c1, c2),
        lambda: _sign("below_f8", c0, c2, c1),
        lambda: _sign("below_f6", c0, c1, c2),
        e_sign) > 0


def _same_pair_below(c0: Circle, c1: Circle, left: bool) -> bool:
    # p_left - p_right = beta_hat perp(c01) / c01^2, so its y part has the sign of c01x.
    dx = _dx_sign(c0, c1)
    return (dx < 0) if left else (dx > 0)


def line_hits_circle(c: Circle, y: int, y_index: int) -> bool:
    """Does the horizontal line through coordinate ``y`` cross the circle?"""
    if y_index == 3 * c.id + 1:
        return True
    return perturbed_sign(P["line_disc"], [c.y, c.r, y], [3 * c.id + 1, 3 * c.id + 2, y_index]) > 0


def line_point_x_less(c1: Circle, t1: int, c2: Circle, t2: int, y: int, y_index: int) -> bool:
    """On the line y = Y, is c1.x + t1 sqrt(R1) left of c2.x + t2 sqrt(R2)?

    ``t`` is +1 for the right crossing and -1 for the left one.
    """
    if c1.id == c2.id:
        if t1 == t2:
            raise ValueError("comparing a line point with itself")
        return t1 < t2
    values = [c2.x, c2.y, c2.r, c1.x, c1.y, c1.r, y]
    i2, i1 = 3 * c2.id, 3 * c1.id
    indices = [i2, i2 + 1, i2 + 2, i1, i1 + 1, i1 + 2, y_index]
    swapped = values[3:6] + values[0:3] + [y]
    swapped_idx = indices[3:6] + indices[0:3] + [y_index]
    # x2 - x1 = A + t2 sqrt(R2) - t1 sqrt(R1), A = c2.x - c1.x.
    sa = perturbed_sign(P["diff"], [c2.x, c1.x], [i2, i1])
    return _two_root_sign(
        sa, t2, -t1,
        lambda: perturbed_sign(P["linex_l"], values, indices),
        lambda: perturbed_sign(P["linex_l"], swapped, swapped_idx),
        lambda: perturbed_sign(P["linex_m"], values, indices),
        lambda: perturbed_sign(P["linex_e"], values, indices)) > 0

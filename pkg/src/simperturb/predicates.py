"""Perturbed point and segment predicates.

A :class:`Point` carries its quantized coordinates and an integer id; its
coordinates are perturbed under global indices ``2*id`` and ``2*id + 1``.
Two points with the same id are the same point, so e.g. asking for the
orientation of a triangle with a repeated vertex raises
:class:`~simperturb.perturb.IdenticallyZeroError`.
"""

from __future__ import annotations

from typing import NamedTuple

from .perturb import perturbed_construction, perturbed_sign
from .polys import PREDICATES

_ORIENT = PREDICATES["orient2d"]
_INCIRCLE = PREDICATES["incircle"]
_DIFF = PREDICATES["diff"]
_SEG_DEN = PREDICATES["seg_den"]
_SEG_ORDER = PREDICATES["seg_order"]
_SEG_X = PREDICATES["seg_x_num"]
_SEG_Y = PREDICATES["seg_y_num"]


class Point(NamedTuple):
    x: int
    y: int
    id: int


def _flat(*pts):
    values = []
    indices = []
    for p in pts:
        values.append(p.x)
        values.append(p.y)
        indices.append(2 * p.id)
        indices.append(2 * p.id + 1)
    return values, indices


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 if pqr turns left in the perturbed world, else -1."""
    return perturbed_sign(_ORIENT, *_flat(p, q, r))


def triangle_oriented(p: Point, q: Point, r: Point) -> bool:
    """Is pqr counterclockwise?"""
    return orientation(p, q, r) > 0


def incircle(p: Point, q: Point, r: Point, s: Point) -> bool:
    """Is s strictly inside the circle through p, q, r (taken counterclockwise)?"""
    sign = perturbed_sign(_INCIRCLE, *_flat(p, q, r, s))
    return sign * orientation(p, q, r) > 0


def y_less(p: Point, q: Point) -> bool:
    """Is p below q?  Perturbation breaks every tie."""
    return perturbed_sign(_DIFF, [q.y, p.y], [2 * q.id + 1, 2 * p.id + 1]) > 0


def x_less(p: Point, q: Point) -> bool:
    return perturbed_sign(_DIFF, [q.x, p.x], [2 * q.id, 2 * p.id]) > 0


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Do segments ab and cd cross?  They must not share an endpoint."""
    return (orientation(a, b, c) != orientation(a, b, d)
            and orientation(c, d, a) != orientation(c, d, b))


def intersection_point(a: Point, b: Point, c: Point, d: Point) -> tuple[int, int]:
    """Rounded crossing point of ab and cd (which must intersect)."""
    values, indices = _flat(a, b, c, d)
    x, y = perturbed_construction([_SEG_X, _SEG_Y], _SEG_DEN, values, indices)
    return x, y


def crossing_sign(a: Point, b: Point, c: Point, d: Point) -> int:
    """Sign of cross(b - a, d - c): +1 when cd crosses ab from right to left."""
    return perturbed_sign(_SEG_DEN, *_flat(a, b, c, d))


def param_less(a: Point, b: Point, c: Point, d: Point, e: Point, f: Point) -> bool:
    """Along ab, does the crossing with cd come before the crossing with ef?"""
    values, indices = _flat(a, b, c, d, e, f)
    s = perturbed_sign(_SEG_ORDER, values, indices)
    s *= crossing_sign(a, b, c, d) * crossing_sign(a, b, e, f)
    return s < 0

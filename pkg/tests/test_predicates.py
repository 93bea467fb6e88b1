import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from simperturb import prf
from simperturb.delaunay import _Builder
from simperturb.perturb import perturbed_sign
from simperturb.polys import PREDICATES
from simperturb.predicates import (Point, crossing_sign, incircle, intersection_point, orientation,
                                   param_less, segments_intersect, x_less, y_less)

EPS = Fraction(1, 1 << 400)
# Exact halves round away from zero on the unperturbed value, which can sit an
# infinitesimal past 1/2 from the perturbed point.
HALF = Fraction(1, 2) + Fraction(1, 1 << 300)


def moved(p: Point):
    """Coordinates of p at a concrete, tiny first-level perturbation."""
    return (p.x + EPS * prf.coefficient(1, 2 * p.id), p.y + EPS * prf.coefficient(1, 2 * p.id + 1))


def real_orient(p, q, r):
    (ax, ay), (bx, by), (cx, cy) = moved(p), moved(q), moved(r)
    v = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (v > 0) - (v < 0)


def real_crossing(a, b, c, d):
    (ax, ay), (bx, by), (cx, cy), (dx, dy) = map(moved, (a, b, c, d))
    den = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx)
    t = ((cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)) / den
    return ax + t * (bx - ax), ay + t * (by - ay)


def small_points(rng, n, span=3):
    ids = rng.sample(range(10**6), n)
    return [Point(rng.randint(-span, span), rng.randint(-span, span), i) for i in ids]


def test_orientation_matches_tiny_real_perturbation():
    rng = random.Random(0)
    for _ in range(400):
        p, q, r = small_points(rng, 3, span=2)
        assert orientation(p, q, r) == real_orient(p, q, r)


def test_orientation_of_coincident_points_is_consistent():
    rng = random.Random(1)
    for _ in range(100):
        ids = rng.sample(range(1000), 3)
        pts = [Point(5, 5, i) for i in ids]
        s = orientation(*pts)
        assert orientation(pts[1], pts[2], pts[0]) == s
        assert orientation(pts[1], pts[0], pts[2]) == -s


def test_coordinate_order_is_total():
    rng = random.Random(2)
    pts = small_points(rng, 30, span=1)
    for p in pts:
        for q in pts:
            if p.id != q.id:
                assert y_less(p, q) != y_less(q, p)
                assert x_less(p, q) != x_less(q, p)
    ranks = sorted(pts, key=lambda p: sum(y_less(q, p) for q in pts if q.id != p.id))
    for a, b in zip(ranks, ranks[1:]):
        assert y_less(a, b)


def test_incircle_agrees_with_delaunay_fast_path():
    rng = random.Random(3)
    pts = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(12)] + [(10**15, -10**15), (7, 7)]
    bld = _Builder(pts)
    P = [Point(x, y, i) for i, (x, y) in enumerate(pts)]
    for _ in range(600):
        a, b, c, d = rng.sample(range(len(pts)), 4)
        assert bld.orient(a, b, c) == orientation(P[a], P[b], P[c])
        want = perturbed_sign(PREDICATES["incircle"], [v for k in (a, b, c, d) for v in pts[k]],
                              [j for k in (a, b, c, d) for j in (2 * k, 2 * k + 1)])
        assert bld.incircle(a, b, c, d) == want
        if bld.orient(a, b, c) > 0:
            assert incircle(P[a], P[b], P[c], P[d]) == (want > 0)


def test_degenerate_crossings_round_to_the_limit():
    rng = random.Random(4)
    hits = 0
    for _ in range(300):
        a, b, c, d = small_points(rng, 4, span=2)
        if len({(p.x, p.y) for p in (a, b, c, d)}) < 2:
            continue
        if not segments_intersect(a, b, c, d):
            continue
        hits += 1
        x, y = real_crossing(a, b, c, d)
        gx, gy = intersection_point(a, b, c, d)
        assert abs(gx - x) <= HALF and abs(gy - y) <= HALF
    assert hits > 30


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-10**9, 10**9), min_size=8, max_size=8))
def test_generic_crossings_round_within_half(v):
    a, b, c, d = (Point(v[2 * k], v[2 * k + 1], k) for k in range(4))
    if not segments_intersect(a, b, c, d):
        return
    x, y = real_crossing(a, b, c, d)
    gx, gy = intersection_point(a, b, c, d)
    assert abs(gx - x) <= HALF and abs(gy - y) <= HALF


def test_crossing_sign_and_param_order():
    a, b = Point(0, 0, 0), Point(10, 0, 1)
    c, d = Point(3, -1, 2), Point(3, 1, 3)
    e, f = Point(7, 1, 4), Point(7, -1, 5)
    assert crossing_sign(a, b, c, d) == 1
    assert crossing_sign(a, b, e, f) == -1
    assert param_less(a, b, c, d, e, f)
    assert not param_less(a, b, e, f, c, d)
    assert not param_less(b, a, c, d, e, f)


def test_param_order_on_shared_crossing_is_antisymmetric():
    # Two segments crossing ab at exactly the same point.
    a, b = Point(0, 0, 0), Point(10, 0, 1)
    c, d = Point(5, -1, 2), Point(5, 1, 3)
    e, f = Point(4, -1, 4), Point(6, 1, 5)
    assert param_less(a, b, c, d, e, f) != param_less(a, b, e, f, c, d)

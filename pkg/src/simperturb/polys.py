"""Integer polynomials behind every shipped predicate and construction.

Each function uses only ``+``, ``-``, ``*`` and integer powers, so it runs
unchanged on Python ints (exact), on :class:`numeric.Interval` (filter) and
on the code generator's tracer.  Circles are passed as ``x, y, r`` triples;
``c01 = c1 - c0`` and so on.

Circle intersection of C0 and C1 (``s`` = +1 picks the point left of c0->c1)::

    alpha = |c01|^2 + r0^2 - r1^2
    beta2 = 4 r0^2 |c01|^2 - alpha^2
    p = c0 + (alpha c01 + s sqrt(beta2) perp(c01)) / (2 |c01|^2)

with ``perp`` the left rotation.
"""

from __future__ import annotations

from .numeric import Predicate


def diff(a, b):
    return a - b


def orient2d(ax, ay, bx, by, cx, cy):
    """Twice the signed area of abc; positive when counterclockwise."""
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)


def incircle(ax, ay, bx, by, cx, cy, dx, dy):
    """Positive when d is inside the circle through counterclockwise a, b, c."""
    adx = ax - dx
    ady = ay - dy
    bdx = bx - dx
    bdy = by - dy
    cdx = cx - dx
    cdy = cy - dy
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (alift * (bdx * cdy - bdy * cdx)
            + blift * (cdx * ady - cdy * adx)
            + clift * (adx * bdy - ady * bdx))


# Segments.  Edge ab meets segment cd at a + t (b - a), t = seg_t_num / seg_den.

def seg_den(ax, ay, bx, by, cx, cy, dx, dy):
    return (bx - ax) * (dy - cy) - (by - ay) * (dx - cx)


def seg_t_num(ax, ay, bx, by, cx, cy, dx, dy):
    return (cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)


def seg_x_num(ax, ay, bx, by, cx, cy, dx, dy):
    return ax * seg_den(ax, ay, bx, by, cx, cy, dx, dy) + seg_t_num(ax, ay, bx, by, cx, cy, dx, dy) * (bx - ax)


def seg_y_num(ax, ay, bx, by, cx, cy, dx, dy):
    return ay * seg_den(ax, ay, bx, by, cx, cy, dx, dy) + seg_t_num(ax, ay, bx, by, cx, cy, dx, dy) * (by - ay)


def seg_order(ax, ay, bx, by, cx, cy, dx, dy, ex, ey, fx, fy):
    """t(cd) * den(cd) * den(ef) - t(ef) * den(cd) * den(ef) along edge ab."""
    d1 = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx)
    d2 = (bx - ax) * (fy - ey) - (by - ay) * (fx - ex)
    n1 = (cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)
    n2 = (ex - ax) * (fy - ey) - (ey - ay) * (fx - ex)
    return n1 * d2 - n2 * d1


# Two circles.

def circle_alpha(x0, y0, r0, x1, y1, r1):
    dx = x1 - x0
    dy = y1 - y0
    return dx * dx + dy * dy + r0 * r0 - r1 * r1


def circle_beta2(x0, y0, r0, x1, y1, r1):
    dx = x1 - x0
    dy = y1 - y0
    d2 = dx * dx + dy * dy
    a = d2 + r0 * r0 - r1 * r1
    return 4 * r0 * r0 * d2 - a * a


def circle_den(x0, y0, r0, x1, y1, r1):
    dx = x1 - x0
    dy = y1 - y0
    return 2 * (dx * dx + dy * dy)


def circle_x_num(x0, y0, r0, x1, y1, r1):
    dx = x1 - x0
    dy = y1 - y0
    d2 = dx * dx + dy * dy
    return 2 * d2 * x0 + (d2 + r0 * r0 - r1 * r1) * dx


def circle_y_num(x0, y0, r0, x1, y1, r1):
    dx = x1 - x0
    dy = y1 - y0
    d2 = dx * dx + dy * dy
    return 2 * d2 * y0 + (d2 + r0 * r0 - r1 * r1) * dy


def circle_x_mul(x0, y0, r0, x1, y1, r1):
    return y0 - y1


def circle_y_mul(x0, y0, r0, x1, y1, r1):
    return x1 - x0


def circle_half_disc(x0, y0, r0, x1, y1, r1):
    """(alpha dx)^2 - dy^2 beta2, divided by |c01|^2."""
    dy = y1 - y0
    a = circle_alpha(x0, y0, r0, x1, y1, r1)
    return a * a - 4 * r0 * r0 * dy * dy


def hline_a(x0, y0, r0, x1, y1, r1, y):
    """2|c01|^2 (p01.y - Y) without the square-root term."""
    dx = x1 - x0
    dy = y1 - y0
    d2 = dx * dx + dy * dy
    return 2 * d2 * (y0 - y) + (d2 + r0 * r0 - r1 * r1) * dy


def hline_disc(x0, y0, r0, x1, y1, r1, y):
    """hline_a^2 - dx^2 beta2, divided by |c01|^2."""
    dx = x1 - x0
    dy = y1 - y0
    d2 = dx * dx + dy * dy
    h = y0 - y
    a = d2 + r0 * r0 - r1 * r1
    return 4 * d2 * h * h + 4 * h * a * dy + a * a - 4 * r0 * r0 * dx * dx


# A circle against the horizontal line y = Y.

def line_disc(cy, r, y):
    """Squared half-chord where the line y = Y cuts the circle."""
    h = y - cy
    return r * r - h * h


def linex_l(x1, y1, r1, x2, y2, r2, y):
    a = x1 - x2
    h1 = y - y1
    h2 = y - y2
    return a * a + (r1 * r1 - h1 * h1) - (r2 * r2 - h2 * h2)


def linex_m(x1, y1, r1, x2, y2, r2, y):
    a = x1 - x2
    h1 = y - y1
    h2 = y - y2
    return a * a - (r1 * r1 - h1 * h1) - (r2 * r2 - h2 * h2)


def linex_e(x1, y1, r1, x2, y2, r2, y):
    h1 = y - y1
    h2 = y - y2
    d1 = r1 * r1 - h1 * h1
    d2 = r2 * r2 - h2 * h2
    a = x1 - x2
    m = a * a - d1 - d2
    return m * m - 4 * d1 * d2


# Three circles sharing C0: is p01 below p02?  The comparison reads
# 0 < A + B1 sqrt(C1) + B2 sqrt(C2) with C1 = beta2(01), C2 = beta2(02),
# B1 = -s01 c01x |c02|^2 and B2 = s02 c02x |c01|^2.

def _three(x0, y0, r0, x1, y1, r1, x2, y2, r2):
    ax = x1 - x0
    ay = y1 - y0
    bx = x2 - x0
    by = y2 - y0
    a2 = ax * ax + ay * ay
    b2 = bx * bx + by * by
    al1 = a2 + r0 * r0 - r1 * r1
    al2 = b2 + r0 * r0 - r2 * r2
    return ax, ay, bx, by, a2, b2, al1, al2


def below_a(x0, y0, r0, x1, y1, r1, x2, y2, r2):
    ax, ay, bx, by, a2, b2, al1, al2 = _three(x0, y0, r0, x1, y1, r1, x2, y2, r2)
    return al2 * by * a2 - al1 * ay * b2


def below_f8(x0, y0, r0, x1, y1, r1, x2, y2, r2):
    """(A^2 + B1^2 C1 - B2^2 C2) / |c02|^2."""
    ax, ay, bx, by, a2, b2, al1, al2 = _three(x0, y0, r0, x1, y1, r1, x2, y2, r2)
    rr = r0 * r0
    return (a2 * (al2 * (al2 * a2 - 2 * al1 * ay * by) + 4 * rr * (ax * ax * by * by - ay * ay * bx * bx))
            - al1 * al1 * (ax * ax - ay * ay) * b2)


def below_f6(x0, y0, r0, x1, y1, r1, x2, y2, r2):
    """(A^2 - B1^2 C1 - B2^2 C2) / (|c01|^2 |c02|^2)."""
    ax, ay, bx, by, a2, b2, al1, al2 = _three(x0, y0, r0, x1, y1, r1, x2, y2, r2)
    rr = r0 * r0
    return (b2 * al1 * al1 + a2 * al2 * al2 - 2 * ay * by * al1 * al2
            - 4 * rr * (ay * ay * bx * bx + ax * ax * by * by + 2 * ax * ax * bx * bx))


def below_ep(x0, y0, r0, x1, y1, r1, x2, y2, r2):
    ax, ay, bx, by, a2, b2, al1, al2 = _three(x0, y0, r0, x1, y1, r1, x2, y2, r2)
    w = ax * by - ay * bx
    return b2 * al1 * al1 + a2 * al2 * al2 - 2 * al1 * al2 * (ay * by + ax * bx) - 4 * r0 * r0 * w * w


def below_em(x0, y0, r0, x1, y1, r1, x2, y2, r2):
    ax, ay, bx, by, a2, b2, al1, al2 = _three(x0, y0, r0, x1, y1, r1, x2, y2, r2)
    w = ax * by + ay * bx
    return b2 * al1 * al1 + a2 * al2 * al2 - 2 * al1 * al2 * (ay * by - ax * bx) - 4 * r0 * r0 * w * w


# name -> (function, arity, degree)
_TABLE = {
    "diff": (diff, 2, 1),
    "orient2d": (orient2d, 6, 2),
    "incircle": (incircle, 8, 4),
    "seg_den": (seg_den, 8, 2),
    "seg_t_num": (seg_t_num, 8, 2),
    "seg_x_num": (seg_x_num, 8, 3),
    "seg_y_num": (seg_y_num, 8, 3),
    "seg_order": (seg_order, 12, 4),
    "circle_alpha": (circle_alpha, 6, 2),
    "circle_beta2": (circle_beta2, 6, 4),
    "circle_den": (circle_den, 6, 2),
    "circle_x_num": (circle_x_num, 6, 3),
    "circle_y_num": (circle_y_num, 6, 3),
    "circle_x_mul": (circle_x_mul, 6, 1),
    "circle_y_mul": (circle_y_mul, 6, 1),
    "circle_half_disc": (circle_half_disc, 6, 4),
    "hline_a": (hline_a, 7, 3),
    "hline_disc": (hline_disc, 7, 4),
    "line_disc": (line_disc, 3, 2),
    "linex_l": (linex_l, 7, 2),
    "linex_m": (linex_m, 7, 2),
    "linex_e": (linex_e, 7, 4),
    "below_a": (below_a, 9, 5),
    "below_f8": (below_f8, 9, 8),
    "below_f6": (below_f6, 9, 6),
    "below_ep": (below_ep, 9, 6),
    "below_em": (below_em, 9, 6),
}

#: Polynomials whose perturbed sign some algorithm asks for.
SIGN_PREDICATES = (
    "diff", "orient2d", "incircle", "seg_den", "seg_order",
    "circle_alpha", "circle_beta2", "circle_half_disc", "hline_a", "hline_disc",
    "line_disc", "linex_l", "linex_m", "linex_e",
    "below_a", "below_f8", "below_f6", "below_ep", "below_em",
)


def _load_kernels() -> dict:
    try:
        from . import _ivkernels
    except ImportError:  # pragma: no cover - generated module missing
        return {}
    return {name: getattr(_ivkernels, "iv_" + name, None) for name in _TABLE}


_kernels = _load_kernels()

PREDICATES: dict[str, Predicate] = {
    name: Predicate(name, fn, arity, degree, _kernels.get(name)) for name, (fn, arity, degree) in _TABLE.items()
}


def table() -> dict:
    """Name -> (function, arity, degree) for every shipped polynomial."""
    return dict(_TABLE)

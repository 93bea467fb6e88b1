"""Interval evaluators generated by simperturb.codegen.  Do not edit."""

import math

try:
    from numba import njit
except ImportError:  # pragma: no cover - pure Python fallback
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

INF = math.inf


@njit(cache=True)
def _dn(x):
    return math.nextafter(x, -INF)


@njit(cache=True)
def _up(x):
    return math.nextafter(x, INF)


@njit(cache=True)
def _mul(al, ah, bl, bh):
    p0 = al * bl
    p1 = al * bh
    p2 = ah * bl
    p3 = ah * bh
    lo = min(min(p0, p1), min(p2, p3))
    hi = max(max(p0, p1), max(p2, p3))
    if lo != lo or hi != hi:
        return -INF, INF
    return _dn(lo), _up(hi)


@njit(cache=True)
def _sqr(al, ah):
    if al >= 0.0:
        return _dn(al * al), _up(ah * ah)
    if ah <= 0.0:
        return _dn(ah * ah), _up(al * al)
    return 0.0, _up(max(al * al, ah * ah))


@njit(cache=True)
def iv_diff(x0, x1):
    l2 = _dn(x0 - x1)
    h2 = _up(x0 - x1)
    return l2, h2


@njit(cache=True)
def iv_orient2d(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x2 - x0)
    h6 = _up(x2 - x0)
    l7 = _dn(x5 - x1)
    h7 = _up(x5 - x1)
    l8, h8 = _mul(l6, h6, l7, h7)
    l9 = _dn(x3 - x1)
    h9 = _up(x3 - x1)
    l10 = _dn(x4 - x0)
    h10 = _up(x4 - x0)
    l11, h11 = _mul(l9, h9, l10, h10)
    l12 = _dn(l8 - h11)
    h12 = _up(h8 - l11)
    return l12, h12


@njit(cache=True)
def iv_incircle(x0, x1, x2, x3, x4, x5, x6, x7):
    l8 = _dn(x0 - x6)
    h8 = _up(x0 - x6)
    l9 = _dn(x1 - x7)
    h9 = _up(x1 - x7)
    l10 = _dn(x2 - x6)
    h10 = _up(x2 - x6)
    l11 = _dn(x3 - x7)
    h11 = _up(x3 - x7)
    l12 = _dn(x4 - x6)
    h12 = _up(x4 - x6)
    l13 = _dn(x5 - x7)
    h13 = _up(x5 - x7)
    l14, h14 = _sqr(l8, h8)
    l15, h15 = _sqr(l9, h9)
    l16 = _dn(l14 + l15)
    h16 = _up(h14 + h15)
    l17, h17 = _sqr(l10, h10)
    l18, h18 = _sqr(l11, h11)
    l19 = _dn(l17 + l18)
    h19 = _up(h17 + h18)
    l20, h20 = _sqr(l12, h12)
    l21, h21 = _sqr(l13, h13)
    l22 = _dn(l20 + l21)
    h22 = _up(h20 + h21)
    l23, h23 = _mul(l10, h10, l13, h13)
    l24, h24 = _mul(l11, h11, l12, h12)
    l25 = _dn(l23 - h24)
    h25 = _up(h23 - l24)
    l26, h26 = _mul(l16, h16, l25, h25)
    l27, h27 = _mul(l9, h9, l12, h12)
    l28, h28 = _mul(l8, h8, l13, h13)
    l29 = _dn(l27 - h28)
    h29 = _up(h27 - l28)
    l30, h30 = _mul(l19, h19, l29, h29)
    l31 = _dn(l26 + l30)
    h31 = _up(h26 + h30)
    l32, h32 = _mul(l8, h8, l11, h11)
    l33, h33 = _mul(l9, h9, l10, h10)
    l34 = _dn(l32 - h33)
    h34 = _up(h32 - l33)
    l35, h35 = _mul(l22, h22, l34, h34)
    l36 = _dn(l31 + l35)
    h36 = _up(h31 + h35)
    return l36, h36


@njit(cache=True)
def iv_seg_den(x0, x1, x2, x3, x4, x5, x6, x7):
    l8 = _dn(x2 - x0)
    h8 = _up(x2 - x0)
    l9 = _dn(x7 - x5)
    h9 = _up(x7 - x5)
    l10, h10 = _mul(l8, h8, l9, h9)
    l11 = _dn(x3 - x1)
    h11 = _up(x3 - x1)
    l12 = _dn(x6 - x4)
    h12 = _up(x6 - x4)
    l13, h13 = _mul(l11, h11, l12, h12)
    l14 = _dn(l10 - h13)
    h14 = _up(h10 - l13)
    return l14, h14


@njit(cache=True)
def iv_seg_t_num(x0, x1, x2, x3, x4, x5, x6, x7):
    l8 = _dn(x4 - x0)
    h8 = _up(x4 - x0)
    l9 = _dn(x7 - x5)
    h9 = _up(x7 - x5)
    l10, h10 = _mul(l8, h8, l9, h9)
    l11 = _dn(x5 - x1)
    h11 = _up(x5 - x1)
    l12 = _dn(x6 - x4)
    h12 = _up(x6 - x4)
    l13, h13 = _mul(l11, h11, l12, h12)
    l14 = _dn(l10 - h13)
    h14 = _up(h10 - l13)
    return l14, h14


@njit(cache=True)
def iv_seg_x_num(x0, x1, x2, x3, x4, x5, x6, x7):
    l8 = _dn(x2 - x0)
    h8 = _up(x2 - x0)
    l9 = _dn(x7 - x5)
    h9 = _up(x7 - x5)
    l10, h10 = _mul(l8, h8, l9, h9)
    l11 = _dn(x3 - x1)
    h11 = _up(x3 - x1)
    l12 = _dn(x6 - x4)
    h12 = _up(x6 - x4)
    l13, h13 = _mul(l11, h11, l12, h12)
    l14 = _dn(l10 - h13)
    h14 = _up(h10 - l13)
    l15, h15 = _mul(x0, x0, l14, h14)
    l16 = _dn(x4 - x0)
    h16 = _up(x4 - x0)
    l17, h17 = _mul(l9, h9, l16, h16)
    l18 = _dn(x5 - x1)
    h18 = _up(x5 - x1)
    l19, h19 = _mul(l12, h12, l18, h18)
    l20 = _dn(l17 - h19)
    h20 = _up(h17 - l19)
    l21, h21 = _mul(l8, h8, l20, h20)
    l22 = _dn(l15 + l21)
    h22 = _up(h15 + h21)
    return l22, h22


@njit(cache=True)
def iv_seg_y_num(x0, x1, x2, x3, x4, x5, x6, x7):
    l8 = _dn(x2 - x0)
    h8 = _up(x2 - x0)
    l9 = _dn(x7 - x5)
    h9 = _up(x7 - x5)
    l10, h10 = _mul(l8, h8, l9, h9)
    l11 = _dn(x3 - x1)
    h11 = _up(x3 - x1)
    l12 = _dn(x6 - x4)
    h12 = _up(x6 - x4)
    l13, h13 = _mul(l11, h11, l12, h12)
    l14 = _dn(l10 - h13)
    h14 = _up(h10 - l13)
    l15, h15 = _mul(x1, x1, l14, h14)
    l16 = _dn(x4 - x0)
    h16 = _up(x4 - x0)
    l17, h17 = _mul(l9, h9, l16, h16)
    l18 = _dn(x5 - x1)
    h18 = _up(x5 - x1)
    l19, h19 = _mul(l12, h12, l18, h18)
    l20 = _dn(l17 - h19)
    h20 = _up(h17 - l19)
    l21, h21 = _mul(l11, h11, l20, h20)
    l22 = _dn(l15 + l21)
    h22 = _up(h15 + h21)
    return l22, h22


@njit(cache=True)
def iv_seg_order(x0, x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11):
    l12 = _dn(x2 - x0)
    h12 = _up(x2 - x0)
    l13 = _dn(x7 - x5)
    h13 = _up(x7 - x5)
    l14, h14 = _mul(l12, h12, l13, h13)
    l15 = _dn(x3 - x1)
    h15 = _up(x3 - x1)
    l16 = _dn(x6 - x4)
    h16 = _up(x6 - x4)
    l17, h17 = _mul(l15, h15, l16, h16)
    l18 = _dn(l14 - h17)
    h18 = _up(h14 - l17)
    l19 = _dn(x11 - x9)
    h19 = _up(x11 - x9)
    l20, h20 = _mul(l12, h12, l19, h19)
    l21 = _dn(x10 - x8)
    h21 = _up(x10 - x8)
    l22, h22 = _mul(l15, h15, l21, h21)
    l23 = _dn(l20 - h22)
    h23 = _up(h20 - l22)
    l24 = _dn(x4 - x0)
    h24 = _up(x4 - x0)
    l25, h25 = _mul(l13, h13, l24, h24)
    l26 = _dn(x5 - x1)
    h26 = _up(x5 - x1)
    l27, h27 = _mul(l16, h16, l26, h26)
    l28 = _dn(l25 - h27)
    h28 = _up(h25 - l27)
    l29 = _dn(x8 - x0)
    h29 = _up(x8 - x0)
    l30, h30 = _mul(l19, h19, l29, h29)
    l31 = _dn(x9 - x1)
    h31 = _up(x9 - x1)
    l32, h32 = _mul(l21, h21, l31, h31)
    l33 = _dn(l30 - h32)
    h33 = _up(h30 - l32)
    l34, h34 = _mul(l23, h23, l28, h28)
    l35, h35 = _mul(l18, h18, l33, h33)
    l36 = _dn(l34 - h35)
    h36 = _up(h34 - l35)
    return l36, h36


@njit(cache=True)
def iv_circle_alpha(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x3 - x0)
    h6 = _up(x3 - x0)
    l7 = _dn(x4 - x1)
    h7 = _up(x4 - x1)
    l8, h8 = _sqr(l6, h6)
    l9, h9 = _sqr(l7, h7)
    l10 = _dn(l8 + l9)
    h10 = _up(h8 + h9)
    l11, h11 = _sqr(x2, x2)
    l12 = _dn(l10 + l11)
    h12 = _up(h10 + h11)
    l13, h13 = _sqr(x5, x5)
    l14 = _dn(l12 - h13)
    h14 = _up(h12 - l13)
    return l14, h14


@njit(cache=True)
def iv_circle_beta2(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x3 - x0)
    h6 = _up(x3 - x0)
    l7 = _dn(x4 - x1)
    h7 = _up(x4 - x1)
    l8, h8 = _sqr(l6, h6)
    l9, h9 = _sqr(l7, h7)
    l10 = _dn(l8 + l9)
    h10 = _up(h8 + h9)
    l11, h11 = _sqr(x2, x2)
    l12 = _dn(l10 + l11)
    h12 = _up(h10 + h11)
    l13, h13 = _sqr(x5, x5)
    l14 = _dn(l12 - h13)
    h14 = _up(h12 - l13)
    l15 = _dn(4.0 * x2)
    h15 = _up(4.0 * x2)
    l16, h16 = _mul(x2, x2, l15, h15)
    l17, h17 = _mul(l10, h10, l16, h16)
    l18, h18 = _sqr(l14, h14)
    l19 = _dn(l17 - h18)
    h19 = _up(h17 - l18)
    return l19, h19


@njit(cache=True)
def iv_circle_den(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x3 - x0)
    h6 = _up(x3 - x0)
    l7 = _dn(x4 - x1)
    h7 = _up(x4 - x1)
    l8, h8 = _sqr(l6, h6)
    l9, h9 = _sqr(l7, h7)
    l10 = _dn(l8 + l9)
    h10 = _up(h8 + h9)
    l11 = _dn(2.0 * l10)
    h11 = _up(2.0 * h10)
    return l11, h11


@njit(cache=True)
def iv_circle_x_num(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x3 - x0)
    h6 = _up(x3 - x0)
    l7 = _dn(x4 - x1)
    h7 = _up(x4 - x1)
    l8, h8 = _sqr(l6, h6)
    l9, h9 = _sqr(l7, h7)
    l10 = _dn(l8 + l9)
    h10 = _up(h8 + h9)
    l11 = _dn(2.0 * l10)
    h11 = _up(2.0 * h10)
    l12, h12 = _mul(x0, x0, l11, h11)
    l13, h13 = _sqr(x2, x2)
    l14 = _dn(l10 + l13)
    h14 = _up(h10 + h13)
    l15, h15 = _sqr(x5, x5)
    l16 = _dn(l14 - h15)
    h16 = _up(h14 - l15)
    l17, h17 = _mul(l6, h6, l16, h16)
    l18 = _dn(l12 + l17)
    h18 = _up(h12 + h17)
    return l18, h18


@njit(cache=True)
def iv_circle_y_num(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x3 - x0)
    h6 = _up(x3 - x0)
    l7 = _dn(x4 - x1)
    h7 = _up(x4 - x1)
    l8, h8 = _sqr(l6, h6)
    l9, h9 = _sqr(l7, h7)
    l10 = _dn(l8 + l9)
    h10 = _up(h8 + h9)
    l11 = _dn(2.0 * l10)
    h11 = _up(2.0 * h10)
    l12, h12 = _mul(x1, x1, l11, h11)
    l13, h13 = _sqr(x2, x2)
    l14 = _dn(l10 + l13)
    h14 = _up(h10 + h13)
    l15, h15 = _sqr(x5, x5)
    l16 = _dn(l14 - h15)
    h16 = _up(h14 - l15)
    l17, h17 = _mul(l7, h7, l16, h16)
    l18 = _dn(l12 + l17)
    h18 = _up(h12 + h17)
    return l18, h18


@njit(cache=True)
def iv_circle_x_mul(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x1 - x4)
    h6 = _up(x1 - x4)
    return l6, h6


@njit(cache=True)
def iv_circle_y_mul(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x3 - x0)
    h6 = _up(x3 - x0)
    return l6, h6


@njit(cache=True)
def iv_circle_half_disc(x0, x1, x2, x3, x4, x5):
    l6 = _dn(x4 - x1)
    h6 = _up(x4 - x1)
    l7 = _dn(x3 - x0)
    h7 = _up(x3 - x0)
    l8, h8 = _sqr(l7, h7)
    l9, h9 = _sqr(l6, h6)
    l10 = _dn(l8 + l9)
    h10 = _up(h8 + h9)
    l11, h11 = _sqr(x2, x2)
    l12 = _dn(l10 + l11)
    h12 = _up(h10 + h11)
    l13, h13 = _sqr(x5, x5)
    l14 = _dn(l12 - h13)
    h14 = _up(h12 - l13)
    l15, h15 = _sqr(l14, h14)
    l16 = _dn(4.0 * x2)
    h16 = _up(4.0 * x2)
    l17, h17 = _mul(x2, x2, l16, h16)
    l18, h18 = _mul(l6, h6, l17, h17)
    l19, h19 = _mul(l6, h6, l18, h18)
    l20 = _dn(l15 - h19)
    h20 = _up(h15 - l19)
    return l20, h20


@njit(cache=True)
def iv_hline_a(x0, x1, x2, x3, x4, x5, x6):
    l7 = _dn(x3 - x0)
    h7 = _up(x3 - x0)
    l8 = _dn(x4 - x1)
    h8 = _up(x4 - x1)
    l9, h9 = _sqr(l7, h7)
    l10, h10 = _sqr(l8, h8)
    l11 = _dn(l9 + l10)
    h11 = _up(h9 + h10)
    l12 = _dn(2.0 * l11)
    h12 = _up(2.0 * h11)
    l13 = _dn(x1 - x6)
    h13 = _up(x1 - x6)
    l14, h14 = _mul(l12, h12, l13, h13)
    l15, h15 = _sqr(x2, x2)
    l16 = _dn(l11 + l15)
    h16 = _up(h11 + h15)
    l17, h17 = _sqr(x5, x5)
    l18 = _dn(l16 - h17)
    h18 = _up(h16 - l17)
    l19, h19 = _mul(l8, h8, l18, h18)
    l20 = _dn(l14 + l19)
    h20 = _up(h14 + h19)
    return l20, h20


@njit(cache=True)
def iv_hline_disc(x0, x1, x2, x3, x4, x5, x6):
    l7 = _dn(x3 - x0)
    h7 = _up(x3 - x0)
    l8 = _dn(x4 - x1)
    h8 = _up(x4 - x1)
    l9, h9 = _sqr(l7, h7)
    l10, h10 = _sqr(l8, h8)
    l11 = _dn(l9 + l10)
    h11 = _up(h9 + h10)
    l12 = _dn(x1 - x6)
    h12 = _up(x1 - x6)
    l13, h13 = _sqr(x2, x2)
    l14 = _dn(l11 + l13)
    h14 = _up(h11 + h13)
    l15, h15 = _sqr(x5, x5)
    l16 = _dn(l14 - h15)
    h16 = _up(h14 - l15)
    l17 = _dn(4.0 * l11)
    h17 = _up(4.0 * h11)
    l18, h18 = _mul(l12, h12, l17, h17)
    l19, h19 = _mul(l12, h12, l18, h18)
    l20 = _dn(4.0 * l12)
    h20 = _up(4.0 * h12)
    l21, h21 = _mul(l16, h16, l20, h20)
    l22, h22 = _mul(l8, h8, l21, h21)
    l23 = _dn(l19 + l22)
    h23 = _up(h19 + h22)
    l24, h24 = _sqr(l16, h16)
    l25 = _dn(l23 + l24)
    h25 = _up(h23 + h24)
    l26 = _dn(4.0 * x2)
    h26 = _up(4.0 * x2)
    l27, h27 = _mul(x2, x2, l26, h26)
    l28, h28 = _mul(l7, h7, l27, h27)
    l29, h29 = _mul(l7, h7, l28, h28)
    l30 = _dn(l25 - h29)
    h30 = _up(h25 - l29)
    return l30, h30


@njit(cache=True)
def iv_line_disc(x0, x1, x2):
    l3 = _dn(x2 - x0)
    h3 = _up(x2 - x0)
    l4, h4 = _sqr(x1, x1)
    l5, h5 = _sqr(l3, h3)
    l6 = _dn(l4 - h5)
    h6 = _up(h4 - l5)
    return l6, h6


@njit(cache=True)
def iv_linex_l(x0, x1, x2, x3, x4, x5, x6):
    l7 = _dn(x0 - x3)
    h7 = _up(x0 - x3)
    l8 = _dn(x6 - x1)
    h8 = _up(x6 - x1)
    l9 = _dn(x6 - x4)
    h9 = _up(x6 - x4)
    l10, h10 = _sqr(l7, h7)
    l11, h11 = _sqr(x2, x2)
    l12, h12 = _sqr(l8, h8)
    l13 = _dn(l11 - h12)
    h13 = _up(h11 - l12)
    l14 = _dn(l10 + l13)
    h14 = _up(h10 + h13)
    l15, h15 = _sqr(x5, x5)
    l16, h16 = _sqr(l9, h9)
    l17 = _dn(l15 - h16)
    h17 = _up(h15 - l16)
    l18 = _dn(l14 - h17)
    h18 = _up(h14 - l17)
    return l18, h18


@njit(cache=True)
def iv_linex_m(x0, x1, x2, x3, x4, x5, x6):
    l7 = _dn(x0 - x3)
    h7 = _up(x0 - x3)
    l8 = _dn(x6 - x1)
    h8 = _up(x6 - x1)
    l9 = _dn(x6 - x4)
    h9 = _up(x6 - x4)
    l10, h10 = _sqr(l7, h7)
    l11, h11 = _sqr(x2, x2)
    l12, h12 = _sqr(l8, h8)
    l13 = _dn(l11 - h12)
    h13 = _up(h11 - l12)
    l14 = _dn(l10 - h13)
    h14 = _up(h10 - l13)
    l15, h15 = _sqr(x5, x5)
    l16, h16 = _sqr(l9, h9)
    l17 = _dn(l15 - h16)
    h17 = _up(h15 - l16)
    l18 = _dn(l14 - h17)
    h18 = _up(h14 - l17)
    return l18, h18


@njit(cache=True)
def iv_linex_e(x0, x1, x2, x3, x4, x5, x6):
    l7 = _dn(x6 - x1)
    h7 = _up(x6 - x1)
    l8 = _dn(x6 - x4)
    h8 = _up(x6 - x4)
    l9, h9 = _sqr(x2, x2)
    l10, h10 = _sqr(l7, h7)
    l11 = _dn(l9 - h10)
    h11 = _up(h9 - l10)
    l12, h12 = _sqr(x5, x5)
    l13, h13 = _sqr(l8, h8)
    l14 = _dn(l12 - h13)
    h14 = _up(h12 - l13)
    l15 = _dn(x0 - x3)
    h15 = _up(x0 - x3)
    l16, h16 = _sqr(l15, h15)
    l17 = _dn(l16 - h11)
    h17 = _up(h16 - l11)
    l18 = _dn(l17 - h14)
    h18 = _up(h17 - l14)
    l19, h19 = _sqr(l18, h18)
    l20 = _dn(4.0 * l11)
    h20 = _up(4.0 * h11)
    l21, h21 = _mul(l14, h14, l20, h20)
    l22 = _dn(l19 - h21)
    h22 = _up(h19 - l21)
    return l22, h22


@njit(cache=True)
def iv_below_a(x0, x1, x2, x3, x4, x5, x6, x7, x8):
    l9 = _dn(x3 - x0)
    h9 = _up(x3 - x0)
    l10 = _dn(x4 - x1)
    h10 = _up(x4 - x1)
    l11 = _dn(x6 - x0)
    h11 = _up(x6 - x0)
    l12 = _dn(x7 - x1)
    h12 = _up(x7 - x1)
    l13, h13 = _sqr(l9, h9)
    l14, h14 = _sqr(l10, h10)
    l15 = _dn(l13 + l14)
    h15 = _up(h13 + h14)
    l16, h16 = _sqr(l11, h11)
    l17, h17 = _sqr(l12, h12)
    l18 = _dn(l16 + l17)
    h18 = _up(h16 + h17)
    l19, h19 = _sqr(x2, x2)
    l20 = _dn(l15 + l19)
    h20 = _up(h15 + h19)
    l21, h21 = _sqr(x5, x5)
    l22 = _dn(l20 - h21)
    h22 = _up(h20 - l21)
    l23 = _dn(l18 + l19)
    h23 = _up(h18 + h19)
    l24, h24 = _sqr(x8, x8)
    l25 = _dn(l23 - h24)
    h25 = _up(h23 - l24)
    l26, h26 = _mul(l12, h12, l25, h25)
    l27, h27 = _mul(l15, h15, l26, h26)
    l28, h28 = _mul(l10, h10, l22, h22)
    l29, h29 = _mul(l18, h18, l28, h28)
    l30 = _dn(l27 - h29)
    h30 = _up(h27 - l29)
    return l30, h30


@njit(cache=True)
def iv_below_f8(x0, x1, x2, x3, x4, x5, x6, x7, x8):
    l9 = _dn(x3 - x0)
    h9 = _up(x3 - x0)
    l10 = _dn(x4 - x1)
    h10 = _up(x4 - x1)
    l11 = _dn(x6 - x0)
    h11 = _up(x6 - x0)
    l12 = _dn(x7 - x1)
    h12 = _up(x7 - x1)
    l13, h13 = _sqr(l9, h9)
    l14, h14 = _sqr(l10, h10)
    l15 = _dn(l13 + l14)
    h15 = _up(h13 + h14)
    l16, h16 = _sqr(l11, h11)
    l17, h17 = _sqr(l12, h12)
    l18 = _dn(l16 + l17)
    h18 = _up(h16 + h17)
    l19, h19 = _sqr(x2, x2)
    l20 = _dn(l15 + l19)
    h20 = _up(h15 + h19)
    l21, h21 = _sqr(x5, x5)
    l22 = _dn(l20 - h21)
    h22 = _up(h20 - l21)
    l23 = _dn(l18 + l19)
    h23 = _up(h18 + h19)
    l24, h24 = _sqr(x8, x8)
    l25 = _dn(l23 - h24)
    h25 = _up(h23 - l24)
    l26, h26 = _mul(l15, h15, l25, h25)
    l27 = _dn(2.0 * l22)
    h27 = _up(2.0 * h22)
    l28, h28 = _mul(l10, h10, l27, h27)
    l29, h29 = _mul(l12, h12, l28, h28)
    l30 = _dn(l26 - h29)
    h30 = _up(h26 - l29)
    l31, h31 = _mul(l25, h25, l30, h30)
    l32 = _dn(4.0 * l19)
    h32 = _up(4.0 * h19)
    l33, h33 = _mul(l12, h12, l13, h13)
    l34, h34 = _mul(l12, h12, l33, h33)
    l35, h35 = _mul(l11, h11, l14, h14)
    l36, h36 = _mul(l11, h11, l35, h35)
    l37 = _dn(l34 - h36)
    h37 = _up(h34 - l36)
    l38, h38 = _mul(l32, h32, l37, h37)
    l39 = _dn(l31 + l38)
    h39 = _up(h31 + h38)
    l40, h40 = _mul(l15, h15, l39, h39)
    l41, h41 = _sqr(l22, h22)
    l42 = _dn(l13 - h14)
    h42 = _up(h13 - l14)
    l43, h43 = _mul(l41, h41, l42, h42)
    l44, h44 = _mul(l18, h18, l43, h43)
    l45 = _dn(l40 - h44)
    h45 = _up(h40 - l44)
    return l45, h45


@njit(cache=True)
def iv_below_f6(x0, x1, x2, x3, x4, x5, x6, x7, x8):
    l9 = _dn(x3 - x0)
    h9 = _up(x3 - x0)
    l10 = _dn(x4 - x1)
    h10 = _up(x4 - x1)
    l11 = _dn(x6 - x0)
    h11 = _up(x6 - x0)
    l12 = _dn(x7 - x1)
    h12 = _up(x7 - x1)
    l13, h13 = _sqr(l9, h9)
    l14, h14 = _sqr(l10, h10)
    l15 = _dn(l13 + l14)
    h15 = _up(h13 + h14)
    l16, h16 = _sqr(l11, h11)
    l17, h17 = _sqr(l12, h12)
    l18 = _dn(l16 + l17)
    h18 = _up(h16 + h17)
    l19, h19 = _sqr(x2, x2)
    l20 = _dn(l15 + l19)
    h20 = _up(h15 + h19)
    l21, h21 = _sqr(x5, x5)
    l22 = _dn(l20 - h21)
    h22 = _up(h20 - l21)
    l23 = _dn(l18 + l19)
    h23 = _up(h18 + h19)
    l24, h24 = _sqr(x8, x8)
    l25 = _dn(l23 - h24)
    h25 = _up(h23 - l24)
    l26, h26 = _mul(l18, h18, l22, h22)
    l27, h27 = _mul(l22, h22, l26, h26)
    l28, h28 = _mul(l15, h15, l25, h25)
    l29, h29 = _mul(l25, h25, l28, h28)
    l30 = _dn(l27 + l29)
    h30 = _up(h27 + h29)
    l31 = _dn(2.0 * l10)
    h31 = _up(2.0 * h10)
    l32, h32 = _mul(l12, h12, l31, h31)
    l33, h33 = _mul(l22, h22, l32, h32)
    l34, h34 = _mul(l25, h25, l33, h33)
    l35 = _dn(l30 - h34)
    h35 = _up(h30 - l34)
    l36 = _dn(4.0 * l19)
    h36 = _up(4.0 * h19)
    l37, h37 = _mul(l11, h11, l14, h14)
    l38, h38 = _mul(l11, h11, l37, h37)
    l39, h39 = _mul(l12, h12, l13, h13)
    l40, h40 = _mul(l12, h12, l39, h39)
    l41 = _dn(l38 + l40)
    h41 = _up(h38 + h40)
    l42 = _dn(2.0 * l9)
    h42 = _up(2.0 * h9)
    l43, h43 = _mul(l9, h9, l42, h42)
    l44, h44 = _mul(l11, h11, l43, h43)
    l45, h45 = _mul(l11, h11, l44, h44)
    l46 = _dn(l41 + l45)
    h46 = _up(h41 + h45)
    l47, h47 = _mul(l36, h36, l46, h46)
    l48 = _dn(l35 - h47)
    h48 = _up(h35 - l47)
    return l48, h48


@njit(cache=True)
def iv_below_ep(x0, x1, x2, x3, x4, x5, x6, x7, x8):
    l9 = _dn(x3 - x0)
    h9 = _up(x3 - x0)
    l10 = _dn(x4 - x1)
    h10 = _up(x4 - x1)
    l11 = _dn(x6 - x0)
    h11 = _up(x6 - x0)
    l12 = _dn(x7 - x1)
    h12 = _up(x7 - x1)
    l13, h13 = _sqr(l9, h9)
    l14, h14 = _sqr(l10, h10)
    l15 = _dn(l13 + l14)
    h15 = _up(h13 + h14)
    l16, h16 = _sqr(l11, h11)
    l17, h17 = _sqr(l12, h12)
    l18 = _dn(l16 + l17)
    h18 = _up(h16 + h17)
    l19, h19 = _sqr(x2, x2)
    l20 = _dn(l15 + l19)
    h20 = _up(h15 + h19)
    l21, h21 = _sqr(x5, x5)
    l22 = _dn(l20 - h21)
    h22 = _up(h20 - l21)
    l23 = _dn(l18 + l19)
    h23 = _up(h18 + h19)
    l24, h24 = _sqr(x8, x8)
    l25 = _dn(l23 - h24)
    h25 = _up(h23 - l24)
    l26, h26 = _mul(l9, h9, l12, h12)
    l27, h27 = _mul(l10, h10, l11, h11)
    l28 = _dn(l26 - h27)
    h28 = _up(h26 - l27)
    l29, h29 = _mul(l18, h18, l22, h22)
    l30, h30 = _mul(l22, h22, l29, h29)
    l31, h31 = _mul(l15, h15, l25, h25)
    l32, h32 = _mul(l25, h25, l31, h31)
    l33 = _dn(l30 + l32)
    h33 = _up(h30 + h32)
    l34 = _dn(2.0 * l22)
    h34 = _up(2.0 * h22)
    l35, h35 = _mul(l25, h25, l34, h34)
    l36, h36 = _mul(l10, h10, l12, h12)
    l37, h37 = _mul(l9, h9, l11, h11)
    l38 = _dn(l36 + l37)
    h38 = _up(h36 + h37)
    l39, h39 = _mul(l35, h35, l38, h38)
    l40 = _dn(l33 - h39)
    h40 = _up(h33 - l39)
    l41 = _dn(4.0 * x2)
    h41 = _up(4.0 * x2)
    l42, h42 = _mul(x2, x2, l41, h41)
    l43, h43 = _mul(l28, h28, l42, h42)
    l44, h44 = _mul(l28, h28, l43, h43)
    l45 = _dn(l40 - h44)
    h45 = _up(h40 - l44)
    return l45, h45


@njit(cache=True)
def iv_below_em(x0, x1, x2, x3, x4, x5, x6, x7, x8):
    l9 = _dn(x3 - x0)
    h9 = _up(x3 - x0)
    l10 = _dn(x4 - x1)
    h10 = _up(x4 - x1)
    l11 = _dn(x6 - x0)
    h11 = _up(x6 - x0)
    l12 = _dn(x7 - x1)
    h12 = _up(x7 - x1)
    l13, h13 = _sqr(l9, h9)
    l14, h14 = _sqr(l10, h10)
    l15 = _dn(l13 + l14)
    h15 = _up(h13 + h14)
    l16, h16 = _sqr(l11, h11)
    l17, h17 = _sqr(l12, h12)
    l18 = _dn(l16 + l17)
    h18 = _up(h16 + h17)
    l19, h19 = _sqr(x2, x2)
    l20 = _dn(l15 + l19)
    h20 = _up(h15 + h19)
    l21, h21 = _sqr(x5, x5)
    l22 = _dn(l20 - h21)
    h22 = _up(h20 - l21)
    l23 = _dn(l18 + l19)
    h23 = _up(h18 + h19)
    l24, h24 = _sqr(x8, x8)
    l25 = _dn(l23 - h24)
    h25 = _up(h23 - l24)
    l26, h26 = _mul(l9, h9, l12, h12)
    l27, h27 = _mul(l10, h10, l11, h11)
    l28 = _dn(l26 + l27)
    h28 = _up(h26 + h27)
    l29, h29 = _mul(l18, h18, l22, h22)
    l30, h30 = _mul(l22, h22, l29, h29)
    l31, h31 = _mul(l15, h15, l25, h25)
    l32, h32 = _mul(l25, h25, l31, h31)
    l33 = _dn(l30 + l32)
    h33 = _up(h30 + h32)
    l34 = _dn(2.0 * l22)
    h34 = _up(2.0 * h22)
    l35, h35 = _mul(l25, h25, l34, h34)
    l36, h36 = _mul(l10, h10, l12, h12)
    l37, h37 = _mul(l9, h9, l11, h11)
    l38 = _dn(l36 - h37)
    h38 = _up(h36 - l37)
    l39, h39 = _mul(l35, h35, l38, h38)
    l40 = _dn(l33 - h39)
    h40 = _up(h33 - l39)
    l41 = _dn(4.0 * x2)
    h41 = _up(4.0 * x2)
    l42, h42 = _mul(x2, x2, l41, h41)
    l43, h43 = _mul(l28, h28, l42, h42)
    l44, h44 = _mul(l28, h28, l43, h43)
    l45 = _dn(l40 - h44)
    h45 = _up(h40 - l44)
    return l45, h45

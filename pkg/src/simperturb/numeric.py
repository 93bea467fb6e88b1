"""Quantization and the two fast tiers of the sign cascade.

Signs are plain ints: 1 (positive), -1 (negative) and 0, which means
"uncertain" for :func:`interval_sign` and "exactly zero" for
:func:`exact_sign`.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

POSITIVE = 1
NEGATIVE = -1
UNCERTAIN = 0

#: Quantized coordinates live in [-LIMIT, LIMIT].
LIMIT = 1 << 53

_INF = math.inf


def _dn(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


class Interval:
    """Closed float interval, widened by one ulp outward after every operation."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float | None = None):
        self.lo = lo
        self.hi = lo if hi is None else hi

    @classmethod
    def from_value(cls, v) -> "Interval":
        if isinstance(v, Interval):
            return v
        try:
            f = float(v)
        except OverflowError:
            big = sys.float_info.max
            return cls(big, _INF) if v > 0 else cls(-_INF, -big)
        if f == v:
            return cls(f, f)
        return cls(_dn(f), _up(f))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __contains__(self, v) -> bool:
        # Exact comparison: Python compares int and float without rounding.
        return self.lo <= v <= self.hi

    def __add__(self, other) -> "Interval":
        o = Interval.from_value(other)
        return Interval(_dn(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        o = Interval.from_value(other)
        return Interval(_dn(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other) -> "Interval":
        return Interval.from_value(other) - self

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other) -> "Interval":
        o = Interval.from_value(other)
        if self is o:
            return self.square()
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        if any(math.isnan(x) for x in p):
            return Interval(-_INF, _INF)
        return Interval(_dn(min(p)), _up(max(p)))

    __rmul__ = __mul__

    def square(self) -> "Interval":
        lo, hi = self.lo, self.hi
        if lo >= 0:
            return Interval(_dn(lo * lo), _up(hi * hi))
        if hi <= 0:
            return Interval(_dn(hi * hi), _up(lo * lo))
        return Interval(0.0, _up(max(lo * lo, hi * hi)))

    def __pow__(self, n: int) -> "Interval":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0:
            return Interval(1.0)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base.square()
        return result

    def sign(self) -> int:
        if self.lo > 0:
            return POSITIVE
        if self.hi < 0:
            return NEGATIVE
        return UNCERTAIN


class Predicate:
    """Black-box integer polynomial of known arity and total degree.

    ``fn`` must be written with ``+``, ``-``, ``*`` and small integer powers
    only, so the same code evaluates exactly on Python ints, conservatively on
    :class:`Interval` values, and symbolically on tracer objects.  ``kernel``
    is an optional compiled interval evaluator taking point floats and
    returning ``(lo, hi)``.
    """

    __slots__ = ("name", "fn", "arity", "degree", "kernel")

    def __init__(self, name: str, fn: Callable, arity: int, degree: int, kernel: Callable | None = None):
        self.name = name
        self.fn = fn
        self.arity = arity
        self.degree = degree
        self.kernel = kernel

    def __repr__(self) -> str:
        return f"Predicate({self.name!r}, arity={self.arity}, degree={self.degree})"

    def __call__(self, *args):
        return self.fn(*args)

    def interval(self, args: Sequence) -> tuple[float, float]:
        """Conservative (lo, hi) enclosure of the value at ``args``."""
        if self.kernel is not None:
            fl = [float(v) for v in args]
            if all(f == v for f, v in zip(fl, args)):
                return self.kernel(*fl)
        iv = Interval.from_value(self.fn(*[Interval.from_value(v) for v in args]))
        return iv.lo, iv.hi


PredicateBlackBox = Predicate


def _check_arity(f: Predicate, args: Sequence) -> None:
    if len(args) != f.arity:
        raise ValueError(f"{f.name} takes {f.arity} arguments, got {len(args)}")


def interval_sign(f: Predicate, args: Sequence) -> int:
    """Sign from interval arithmetic, or UNCERTAIN; never wrong when certain."""
    _check_arity(f, args)
    lo, hi = f.interval(args)
    if lo > 0:
        return POSITIVE
    if hi < 0:
        return NEGATIVE
    return UNCERTAIN


def exact_sign(f: Predicate, args: Sequence[int]) -> int:
    _check_arity(f, args)
    v = f.fn(*args)
    return (v > 0) - (v < 0)


@dataclass
class Quantization:
    """Uniform affine map from real coordinates onto the integer grid."""

    scale: float
    offset: tuple[float, float]
    points: list[tuple[int, int]]

    def to_real(self, q) -> tuple[float, float]:
        if self.scale == 0:
            return self.offset
        return (q[0] / self.scale + self.offset[0], q[1] / self.scale + self.offset[1])

    def length_to_grid(self, length: float) -> int:
        return int(math.floor(length * self.scale + 0.5))


def quantize(points, bounds=None) -> Quantization:
    """Map points into [-2**53, 2**53]^2, rounding to nearest with ties toward +inf.

    ``bounds`` is ``(xmin, ymin, xmax, ymax)`` and defaults to the bounding box
    of the points.  The larger extent spans the full range; the box centre goes
    to the origin.  A box of zero extent sends everything to the origin.
    """
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if bounds is None:
        if len(pts) == 0:
            return Quantization(0.0, (0.0, 0.0), [])
        xmin, ymin = pts.min(axis=0)
        xmax, ymax = pts.max(axis=0)
    else:
        xmin, ymin, xmax, ymax = (float(b) for b in bounds)
    cx = 0.5 * (xmin + xmax)
    cy = 0.5 * (ymin + ymax)
    extent = max(xmax - xmin, ymax - ymin)
    if extent <= 0:
        return Quantization(0.0, (cx, cy), [(0, 0)] * len(pts))
    scale = float(2 * LIMIT) / extent
    q = np.floor((pts - (cx, cy)) * scale + 0.5)
    q = np.clip(q, -LIMIT, LIMIT)
    out = [(int(x), int(y)) for x, y in q.tolist()]
    return Quantization(scale, (float(cx), float(cy)), out)

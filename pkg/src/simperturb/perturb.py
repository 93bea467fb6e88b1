"""Perturbed signs and exactly rounded perturbed constructions.

Every input coordinate carries a global index ``i``.  The perturbed input is
``x + eps_1 y_1 + eps_2 y_2 + ...`` with ``y_k[i] = prf.coefficient(k, i)``
and ``eps_1 >> eps_2 >> ...`` infinitesimal.  A sign query runs three tiers:
interval filter, exact integer evaluation, then perturbation levels
``k = 1, 2, ...`` until the level-k polynomial in ``eps_1..eps_k`` is nonzero.
"""

from __future__ import annotations

import os
from collections import Counter
from contextlib import contextmanager
from math import isqrt
from typing import Sequence

from . import prf
from .interpolation import (divided_differences, dominance_key, interpolate_multivariate,
                            lattice, newton_to_monomial)
from .numeric import Predicate


class IdenticallyZeroError(ArithmeticError):
    """The predicate polynomial vanishes identically on its (tied) arguments."""


class InfiniteConstructionError(ArithmeticError):
    """A numerator outgrows the denominator: the construction has no finite limit."""


class ImaginaryConstructionError(ArithmeticError):
    """The square-root radicand is negative in the perturbed world."""


class FilterMismatchError(AssertionError):
    """Interval and exact tiers disagreed (only checked with both_paths on)."""


class Stats:
    """How sign queries were resolved: interval, exact, or perturbation level."""

    def __init__(self):
        self.reset()

    def reset(self) -> None:
        self.interval = 0
        self.exact = 0
        self.levels: Counter = Counter()

    @property
    def perturbed(self) -> int:
        return sum(self.levels.values())

    @property
    def calls(self) -> int:
        return self.interval + self.exact + self.perturbed

    def snapshot(self) -> dict:
        return {"interval": self.interval, "exact": self.exact, "levels": dict(sorted(self.levels.items()))}


STATS = Stats()


class _Debug:
    both_paths = os.environ.get("SIMPERTURB_BOTH_PATHS", "") not in ("", "0")
    start_level = 0


DEBUG = _Debug()


@contextmanager
def debug(both_paths: bool | None = None, start_level: int | None = None):
    """Temporarily evaluate both fast and exact tiers, or skip to a level."""
    old = (DEBUG.both_paths, DEBUG.start_level)
    if both_paths is not None:
        DEBUG.both_paths = both_paths
    if start_level is not None:
        DEBUG.start_level = start_level
    try:
        yield DEBUG
    finally:
        DEBUG.both_paths, DEBUG.start_level = old


# Identity check points live at levels counting down from 2**64 - 1, far away
# from any perturbation level.
_IDENTITY_TRIALS = 20
_IDENTITY_TOP = (1 << 64) - 1


def check_nonzero_polynomial(f: Predicate, indices: Sequence[int] | None = None) -> bool:
    """True once f is nonzero at one of 20 pseudorandom 32-bit points.

    Arguments sharing a global index are the same variable, so ``orient2d``
    on a repeated point is correctly reported as identically zero.
    """
    if indices is None:
        slots = list(range(f.arity))
    else:
        first: dict[int, int] = {}
        slots = [first.setdefault(i, len(first)) for i in indices]
    for t in range(_IDENTITY_TRIALS):
        level = _IDENTITY_TOP - t
        point = [prf.rand_coefficient(level, s) for s in slots]
        if f.fn(*point) != 0:
            return True
    return False


def _level_table(f, degree, values, indices, k, prev):
    """Values of f on the level-k lattice, reusing level k-1 values where e_k = 0."""
    lat = lattice(k, degree)
    ys = [[prf.coefficient(j, i) for i in indices] for j in range(1, k + 1)]
    fn = f.fn
    out = []
    for e in lat.tuples:
        if prev is not None and e[-1] == 0:
            out.append(prev[e[:-1]])
            continue
        args = list(values)
        for j, ej in enumerate(e):
            if ej:
                y = ys[j]
                for a in range(len(args)):
                    args[a] += ej * y[a]
        out.append(fn(*args))
    return lat, out


def _level_polynomial(f, values, indices, k):
    """Monomial coefficients of f(x + sum_{j<=k} eps_j y_j) on the level-k lattice."""
    lat, vals = _level_table(f, f.degree, values, indices, k, None)
    return lat, interpolate_multivariate(vals, k, lat.d)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def resolve(f: Predicate, values: Sequence[int], indices: Sequence[int]) -> tuple[int, object]:
    """Perturbed sign of f together with the tier that decided it.

    The tier is ``"interval"``, ``"exact"`` or the perturbation level (an int).
    """
    if len(values) != f.arity or len(indices) != f.arity:
        raise ValueError(f"{f.name} takes {f.arity} arguments")
    start = DEBUG.start_level
    if start <= 0:
        lo, hi = f.interval(values)
        si = 1 if lo > 0 else (-1 if hi < 0 else 0)
        if si and not DEBUG.both_paths:
            STATS.interval += 1
            return si, "interval"
        v0 = f.fn(*values)
        se = _sign(v0)
        if si:
            if si != se:
                raise FilterMismatchError(f"{f.name}: interval says {si}, exact says {se}")
            STATS.interval += 1
            return si, "interval"
        if se:
            STATS.exact += 1
            return se, "exact"
        prev = {(): v0}
        k = 1
    else:
        prev = None
        k = start
    k, _m, c = _leading_term(f, values, indices, k, prev)
    STATS.levels[k] += 1
    return (1 if c > 0 else -1), k


def sign_after_filter(f: Predicate, values: Sequence[int], indices: Sequence[int], y1=None) -> int:
    """Exact and perturbation tiers only, for callers that ran their own filter.

    Callers must count their filter successes in ``STATS.interval``.
    ``y1`` may hold the level-1 coefficients for ``indices`` if the caller
    caches them.
    """
    v0 = f.fn(*values)
    if v0:
        STATS.exact += 1
        return 1 if v0 > 0 else -1
    k, _m, c = _leading_term(f, values, indices, 1, {(): v0}, y1)
    STATS.levels[k] += 1
    return 1 if c > 0 else -1


def _level_one(f, values, indices, y=None):
    """Values of f(x + j y_1) for j = 0..d (the univariate level-1 table)."""
    if y is None:
        y = [prf.coefficient(1, i) for i in indices]
    args = list(values)
    n = len(args)
    fn = f.fn
    out = [fn(*args)]
    for _ in range(f.degree):
        for a in range(n):
            args[a] += y[a]
        out.append(fn(*args))
    return out


def _leading_term(f, values, indices, k, prev, y1=None):
    """(level, dominant tuple, coefficient) of the first nonzero perturbation level."""
    if k == 1:
        vals = _level_one(f, values, indices, y1)
        if any(vals):
            coeffs = newton_to_monomial(divided_differences(vals))
            for m, c in enumerate(coeffs):
                if c:
                    return 1, (m,), c
        prev = {(j,): v for j, v in enumerate(vals)}
        k = 2
    checked = False
    limit = len(set(indices)) + 1
    while True:
        lat, vals = _level_table(f, f.degree, values, indices, k, prev)
        if any(vals):
            coeffs = interpolate_multivariate(vals, k, f.degree)
            for i in lat.dominance:
                if coeffs[i]:
                    return k, lat.tuples[i], coeffs[i]
        if k >= 2 and not checked:
            if not check_nonzero_polynomial(f, indices):
                raise IdenticallyZeroError(f"{f.name} is identically zero on these arguments")
            checked = True
        if k > limit:  # pragma: no cover - impossible for a nonzero polynomial
            raise IdenticallyZeroError(f"{f.name} did not resolve by level {k}")
        prev = dict(zip(lat.tuples, vals))
        k += 1


def perturbed_sign(f: Predicate, values: Sequence[int], indices: Sequence[int]) -> int:
    """Sign of f at the perturbed input: always +1 or -1."""
    return resolve(f, values, indices)[0]


# Exact rounding.

def sqrt_sum_sign(u: int, w: int, s: int) -> int:
    """Sign of u + w*sqrt(s) for integers with s >= 0."""
    if s < 0:
        raise ValueError("negative radicand")
    su = _sign(u)
    sw = _sign(w) if s else 0
    if sw == 0:
        return su
    if su == 0 or su == sw:
        return sw
    return su * _sign(u * u - w * w * s)


def round_ratio(a: int, d: int) -> int:
    """Nearest integer to a/d, halves rounded away from zero."""
    if d == 0:
        raise ZeroDivisionError("round_ratio with zero denominator")
    if d < 0:
        a, d = -a, -d
    q = (2 * abs(a) + d) // (2 * d)
    return q if a >= 0 else -q


def round_sqrt_expr(a: int, b: int, s: int, d: int) -> int:
    """Nearest integer to (a + b*sqrt(s)) / d, halves away from zero, exactly."""
    if d == 0:
        raise ZeroDivisionError("round_sqrt_expr with zero denominator")
    if s < 0:
        raise ValueError("negative radicand")
    if d < 0:
        a, b, d = -a, -b, -d
    if b == 0 or s == 0:
        return round_ratio(a, d)
    t = isqrt(b * b * s)
    n = round_ratio(a + (t if b > 0 else -t), d)
    while True:
        # v - (n - 1/2) and v - (n + 1/2), scaled by 2d > 0.
        lo = sqrt_sum_sign(2 * a - (2 * n - 1) * d, 2 * b, s)
        if lo < 0 or (lo == 0 and n <= 0):
            n -= 1
            continue
        hi = sqrt_sum_sign(2 * a - (2 * n + 1) * d, 2 * b, s)
        if hi > 0 or (hi == 0 and n >= 0):
            n += 1
            continue
        return n


def rounded_sqrt_ratio(p: int, q: int) -> int:
    """Nearest integer to sqrt(p/q), halves rounded up."""
    if q == 0:
        raise ZeroDivisionError("rounded_sqrt_ratio with q = 0")
    if q < 0:
        p, q = -p, -q
    if p < 0:
        raise ValueError("p/q must be nonnegative")
    return round_sqrt_expr(0, 1, p * q, q)


# Constructions.

class _SquaredRadical(Predicate):
    """h^2 * s as a black box, for the limit of (h sqrt(s))^2."""

    __slots__ = ()

    def __init__(self, h: Predicate, s: Predicate):
        def fn(*args):
            hv = h.fn(*args)
            return hv * hv * s.fn(*args)

        super().__init__(f"{h.name}^2*{s.name}", fn, h.arity, 2 * h.degree + s.degree)


_squared_cache: dict[tuple[int, int], _SquaredRadical] = {}


def _squared(h: Predicate, s: Predicate) -> _SquaredRadical:
    key = (id(h), id(s))
    sq = _squared_cache.get(key)
    if sq is None:
        sq = _squared_cache[key] = _SquaredRadical(h, s)
    return sq


def _coefficient_at(f: Predicate, values, indices, k: int, m: tuple) -> int:
    lat, coeffs = _level_polynomial(f, values, indices, k)
    km = dominance_key(m)
    for i in lat.dominance:
        e = lat.tuples[i]
        if dominance_key(e) >= km:
            break
        if coeffs[i]:
            raise InfiniteConstructionError(f"{f.name} has a term {e} larger than the denominator's {m}")
    idx = lat.index.get(m)
    return 0 if idx is None else coeffs[idx]


def perturbed_construction(numerators: Sequence[Predicate], denominator: Predicate,
                           values: Sequence[int], indices: Sequence[int],
                           sqrt_parts: Sequence | None = None) -> list[int]:
    """Round lim (f + h sqrt(s)) / g at the perturbed input, per numerator f.

    ``sqrt_parts`` holds ``(s, h)`` or ``None`` for each numerator.
    """
    parts = list(sqrt_parts) if sqrt_parts is not None else [None] * len(numerators)
    g = denominator
    q = g.fn(*values)
    out = []
    if q != 0:
        for f, part in zip(numerators, parts):
            p = f.fn(*values)
            if part is None:
                out.append(round_ratio(p, q))
                continue
            s, h = part
            sv = s.fn(*values)
            if sv < 0:
                raise ImaginaryConstructionError(f"{s.name} is negative")
            hv = h.fn(*values)
            out.append(round_sqrt_expr(p, _sign(hv), hv * hv * sv, q))
        return out
    k, m, q = _leading_term(g, values, indices, 1, {(): 0})
    m2 = tuple(2 * e for e in m)
    for f, part in zip(numerators, parts):
        p = _coefficient_at(f, values, indices, k, m)
        if part is None:
            out.append(round_ratio(p, q))
            continue
        s, h = part
        big = _coefficient_at(_squared(h, s), values, indices, k, m2)
        if big < 0:
            raise ImaginaryConstructionError(f"{s.name} is negative in the perturbed limit")
        if big == 0:
            out.append(round_ratio(p, q))
            continue
        sh = perturbed_sign(h, values, indices)
        out.append(round_sqrt_expr(p, sh, big, q))
    return out

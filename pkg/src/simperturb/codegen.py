"""Generate compiled interval evaluators from the polynomials in :mod:`polys`.

Each polynomial is traced once into straight-line code (common
subexpressions shared), then emitted as a numba function over (lo, hi)
float pairs that widens every result by one ulp in each direction.

Regenerate with ``python -m simperturb.codegen``; a test checks that the
checked-in module matches.
"""

from __future__ import annotations

import inspect
from pathlib import Path

from . import polys


class _Graph:
    def __init__(self):
        self.nodes: list[tuple] = []
        self.memo: dict[tuple, int] = {}

    def add(self, op: tuple) -> "Tracer":
        idx = self.memo.get(op)
        if idx is None:
            idx = len(self.nodes)
            self.nodes.append(op)
            self.memo[op] = idx
        return Tracer(self, idx)


class Tracer:
    __slots__ = ("g", "i")

    def __init__(self, g: _Graph, i: int):
        self.g = g
        self.i = i

    def _lift(self, other) -> "Tracer":
        if isinstance(other, Tracer):
            return other
        if isinstance(other, int):
            return self.g.add(("const", other))
        raise TypeError(f"cannot trace {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        a, b = sorted((self.i, o.i))
        return self.g.add(("add", a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self.g.add(("sub", self.i, self._lift(other).i))

    def __rsub__(self, other):
        return self.g.add(("sub", self._lift(other).i, self.i))

    def __neg__(self):
        return self.g.add(("neg", self.i))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.g.add(("cmul", other, self.i))
        o = self._lift(other)
        if o.i == self.i:
            return self.g.add(("sqr", self.i))
        a, b = sorted((self.i, o.i))
        return self.g.add(("mul", a, b))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 1:
            return NotImplemented
        if n == 1:
            return self
        half = self ** (n // 2)
        sq = half * half
        return sq * self if n % 2 else sq


def trace(fn, arity: int) -> tuple[list[tuple], int]:
    g = _Graph()
    args = [g.add(("arg", k)) for k in range(arity)]
    out = fn(*args)
    return g.nodes, out.i


_HEADER = '''"""Interval evaluators generated by simperturb.codegen.  Do not edit."""

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
'''


def _emit(name: str, nodes: list[tuple], out: int, arity: int) -> str:
    params = ", ".join(f"x{k}" for k in range(arity))
    lines = ["", "", "@njit(cache=True)", f"def iv_{name}({params}):"]
    ref = {}
    for i, op in enumerate(nodes):
        kind = op[0]
        if kind == "arg":
            ref[i] = (f"x{op[1]}", f"x{op[1]}")
            continue
        if kind == "const":
            ref[i] = (repr(float(op[1])), repr(float(op[1])))
            continue
        lo, hi = f"l{i}", f"h{i}"
        if kind == "add":
            (al, ah), (bl, bh) = ref[op[1]], ref[op[2]]
            lines.append(f"    {lo} = _dn({al} + {bl})")
            lines.append(f"    {hi} = _up({ah} + {bh})")
        elif kind == "sub":
            (al, ah), (bl, bh) = ref[op[1]], ref[op[2]]
            lines.append(f"    {lo} = _dn({al} - {bh})")
            lines.append(f"    {hi} = _up({ah} - {bl})")
        elif kind == "neg":
            al, ah = ref[op[1]]
            lines.append(f"    {lo} = -{ah}")
            lines.append(f"    {hi} = -{al}")
        elif kind == "cmul":
            c = op[1]
            al, ah = ref[op[2]]
            if c >= 0:
                lines.append(f"    {lo} = _dn({float(c)!r} * {al})")
                lines.append(f"    {hi} = _up({float(c)!r} * {ah})")
            else:
                lines.append(f"    {lo} = _dn({float(c)!r} * {ah})")
                lines.append(f"    {hi} = _up({float(c)!r} * {al})")
        elif kind == "mul":
            (al, ah), (bl, bh) = ref[op[1]], ref[op[2]]
            lines.append(f"    {lo}, {hi} = _mul({al}, {ah}, {bl}, {bh})")
        elif kind == "sqr":
            al, ah = ref[op[1]]
            lines.append(f"    {lo}, {hi} = _sqr({al}, {ah})")
        else:  # pragma: no cover
            raise ValueError(kind)
        ref[i] = (lo, hi)
    lo, hi = ref[out]
    lines.append(f"    return {lo}, {hi}")
    return "\n".join(lines) + "\n"


def generate() -> str:
    parts = [_HEADER]
    for name, (fn, arity, _degree) in polys.table().items():
        nodes, out = trace(fn, arity)
        parts.append(_emit(name, nodes, out, arity))
    return "".join(parts)


def target_path() -> Path:
    return Path(inspect.getfile(polys)).with_name("_ivkernels.py")


def main() -> None:
    target_path().write_text(generate())


if __name__ == "__main__":
    main()

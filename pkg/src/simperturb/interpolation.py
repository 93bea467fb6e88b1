"""Exact integer interpolation on the simplex lattice {e >= 0, sum(e) <= d}.

Values of an integer polynomial at the nodes 0, 1, ..., d are converted to
Newton coefficients by divided differences and then expanded to monomials.
Every division in the divided-difference pass is exact for integer
polynomials (the j-th forward difference is divisible by j!), so all work
happens in Python integers and a nonzero remainder means the input was not
a degree <= d integer polynomial.

The multivariate version runs the univariate pass along every lattice line,
one variable at a time; the Newton-to-monomial expansion factors the same
way.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Sequence


class InterpolationError(ArithmeticError):
    """A divided difference was not an exact integer."""


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InterpolationError(f"{num} is not divisible by {den}")
    return q


def divided_differences(values: Sequence[int]) -> list[int]:
    """Newton coefficients of the polynomial through (j, values[j]), j = 0..d."""
    c = list(values)
    n = len(c)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            q, r = divmod(c[i] - c[i - 1], j)
            if r:
                raise InterpolationError(f"{c[i] - c[i - 1]} is not divisible by {j}")
            c[i] = q
    return c


def newton_to_monomial(newton: Sequence[int]) -> list[int]:
    """Expand sum_j c_j x(x-1)...(x-j+1) into monomial coefficients."""
    a = list(newton)
    n = len(a) - 1
    # Nested form c0 + x(c1 + (x-1)(c2 + ...)); node j is the integer j.
    for j in range(n - 1, 0, -1):
        for i in range(j, n):
            a[i] -= j * a[i + 1]
    return a


def evaluate_univariate(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


class Lattice:
    """Simplex lattice of exponent tuples for k variables and total degree <= d.

    ``tuples`` is the frozen storage order (total degree, then lexicographic);
    ``dominance`` lists storage positions from the largest monomial to the
    smallest under eps_1 >> eps_2 >> ... (every power of eps_j exceeds eps_{j+1}),
    which compares the last exponent first.
    """

    def __init__(self, k: int, d: int):
        if k < 1 or d < 0:
            raise ValueError("need k >= 1 and d >= 0")
        self.k = k
        self.d = d
        tuples = []
        for total in range(d + 1):
            tuples.extend(_compositions(total, k))
        self.tuples: list[tuple[int, ...]] = tuples
        self.index = {e: i for i, e in enumerate(tuples)}
        self.dominance = sorted(range(len(tuples)), key=lambda i: dominance_key(tuples[i]))
        # For each variable, the lattice lines along it: positions ordered by that exponent.
        self.lines: list[list[list[int]]] = []
        for v in range(k):
            lines = []
            for e in tuples:
                if e[v] == 0:
                    line = []
                    f = list(e)
                    while sum(f) <= d:
                        line.append(self.index[tuple(f)])
                        f[v] += 1
                    if len(line) > 1:
                        lines.append(line)
            self.lines.append(lines)
        # Positions with e_k >= 1: the points new at this level.
        self.fresh = [i for i, e in enumerate(tuples) if e[-1] > 0]

    def __len__(self) -> int:
        return len(self.tuples)

    def op_count(self) -> int:
        """Linear big-integer operations used by one interpolation."""
        total = 0
        for lines in self.lines:
            for line in lines:
                m = len(line) - 1
                total += m * (m + 1)  # divided differences + expansion
        return total


def _compositions(total: int, k: int) -> list[tuple[int, ...]]:
    # Lexicographic order of k-tuples summing to total, largest first exponent last.
    out = []
    for bars in combinations(range(total + k - 1), k - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(total + k - 1 - prev - 1)
        out.append(tuple(parts))
    out.sort()
    return out


def dominance_key(e: Sequence[int]) -> tuple[int, ...]:
    """Sort key: smaller keys are larger (dominant) monomials in the eps ordering."""
    return tuple(reversed(e))


@lru_cache(maxsize=None)
def lattice(k: int, d: int) -> Lattice:
    return Lattice(k, d)


def lattice_size(k: int, d: int) -> int:
    return comb(k + d, k)


def interpolate_multivariate(values: dict | Sequence[int], k: int, d: int) -> list[int]:
    """Monomial coefficients (in lattice storage order) from lattice values.

    ``values`` is either a mapping from exponent tuple to value or a sequence
    in the lattice's storage order.
    """
    lat = lattice(k, d)
    if isinstance(values, dict):
        c = [values[e] for e in lat.tuples]
    else:
        c = list(values)
        if len(c) != len(lat):
            raise ValueError(f"expected {len(lat)} values, got {len(c)}")
    for lines in lat.lines:
        for line in lines:
            m = len(line)
            for j in range(1, m):
                for i in range(m - 1, j - 1, -1):
                    c[line[i]] = _exact_div(c[line[i]] - c[line[i - 1]], j)
    for lines in lat.lines:
        for line in lines:
            n = len(line) - 1
            for j in range(n - 1, 0, -1):
                for i in range(j, n):
                    c[line[i]] -= j * c[line[i + 1]]
    return c


def coefficient_table(coeffs: Sequence[int], k: int, d: int) -> dict[tuple[int, ...], int]:
    lat = lattice(k, d)
    return {e: coeffs[i] for i, e in enumerate(lat.tuples)}


def evaluate_multivariate(table: dict[tuple[int, ...], int], point: Sequence[int]) -> int:
    total = 0
    for e, c in table.items():
        if c:
            term = c
            for x, p in zip(point, e):
                term *= x**p
            total += term
    return total


def dominant_term(coeffs: Sequence[int], k: int, d: int) -> tuple[tuple[int, ...], int] | None:
    """The largest nonzero monomial and its coefficient, or None if all vanish."""
    lat = lattice(k, d)
    for i in lat.dominance:
        if coeffs[i]:
            return lat.tuples[i], coeffs[i]
    return None
